#pragma once

// Formal words in the Steinberg generators x_ij(a) and their evaluation to
// elementary matrices. Words are never rewritten; identities between words
// are checked on their images in GL_n.

#include <string>
#include <vector>

#include "nilk/matrix.hpp"

namespace nilk {

template <Coefficient C>
struct Letter {
    std::size_t i;
    std::size_t j;
    Poly<C> param;
    bool inverted = false;

    friend bool operator==(const Letter &, const Letter &) = default;
};

template <Coefficient C>
class StWord {
public:
    explicit StWord(RingPtr ring) : ring_(std::move(ring)) {}
    StWord(RingPtr ring, std::vector<Letter<C>> letters) : ring_(std::move(ring)) {
        for (auto &l : letters)
            push(std::move(l));
    }

    /// Single generator x_ij(a).
    static StWord generator(std::size_t i, std::size_t j, const Poly<C> &a) {
        StWord w(a.ring());
        w.push({i, j, a, false});
        return w;
    }

    void push(Letter<C> l) {
        if (l.i == l.j)
            throw std::invalid_argument("Steinberg letter needs i != j");
        if (l.i == 0 || l.j == 0)
            throw std::invalid_argument("Steinberg indices are 1-based");
        if (!same_ring(l.param.ring(), ring_))
            throw RingMismatch("letter parameter in " + l.param.descriptor());
        letters_.push_back(std::move(l));
    }

    const RingPtr &ring() const { return ring_; }
    const std::vector<Letter<C>> &letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    std::size_t max_index() const {
        std::size_t m = 0;
        for (const auto &l : letters_)
            m = std::max({m, l.i, l.j});
        return m;
    }

    friend StWord operator*(const StWord &a, const StWord &b) {
        if (!same_ring(a.ring_, b.ring_))
            throw RingMismatch("concatenating words over different rings");
        StWord out = a;
        out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
        return out;
    }

    /// Reversed, with every letter's inverted flag toggled.
    StWord inverse() const {
        StWord out(ring_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            Letter<C> l = *it;
            l.inverted = !l.inverted;
            out.letters_.push_back(std::move(l));
        }
        return out;
    }

    /// Ordered product of elementary matrices; x_ij(a)^-1 evaluates to e_ij(-a).
    Matrix<C> eval(std::size_t n) const {
        if (max_index() > n)
            throw DimensionMismatch("word uses index " + std::to_string(max_index()) + " > " + std::to_string(n));
        Matrix<C> out = Matrix<C>::identity(ring_, n);
        for (const auto &l : letters_) {
            const Poly<C> a = l.inverted ? -l.param : l.param;
            // right-multiplying by e_ij(a) adds a * column i to column j
            for (std::size_t r = 0; r < n; ++r) {
                const auto &v = out(r, l.i - 1);
                if (!v.is_zero())
                    out(r, l.j - 1) += v * a;
            }
        }
        return out;
    }

    std::string to_string() const {
        if (letters_.empty())
            return "1";
        std::string out;
        for (const auto &l : letters_) {
            out += "x" + std::to_string(l.i) + std::to_string(l.j) + "(" + l.param.to_string() + ")";
            if (l.inverted)
                out += "^-1";
        }
        return out;
    }

    friend bool operator==(const StWord &a, const StWord &b) {
        return same_ring(a.ring_, b.ring_) && a.letters_ == b.letters_;
    }

private:
    RingPtr ring_;
    std::vector<Letter<C>> letters_;
};

template <Coefficient C>
StWord<C> word_inverse(const StWord<C> &w) {
    return w.inverse();
}

/// h_ij(a) = x_ij(a) x_ji(-a^-1) x_ij(a) x_ij(-1) x_ji(1) x_ij(-1). Throws NotAUnit.
template <Coefficient C>
StWord<C> expand_h(std::size_t i, std::size_t j, const Poly<C> &a) {
    auto a_inv = a.try_invert();
    if (!a_inv)
        throw NotAUnit(a.to_string());
    const auto &ring = a.ring();
    const auto one = Poly<C>::one(ring);
    return StWord<C>(ring, {{i, j, a, false},
                            {j, i, -*a_inv, false},
                            {i, j, a, false},
                            {i, j, -one, false},
                            {j, i, one, false},
                            {i, j, -one, false}});
}

/// Dennis-Stein symbol <a, b> as the word
///   x_ji(-b (1-ab)^-1) x_ij(-a) x_ji(b) x_ij((1-ab)^-1 a) h_ij(1-ab)^-1.
/// Throws NotAUnit when 1 - ab is not a recognized unit.
template <Coefficient C>
StWord<C> dennis_stein_word(std::size_t i, std::size_t j, const Poly<C> &a, const Poly<C> &b) {
    a.require_same(b);
    const auto &ring = a.ring();
    const Poly<C> u = Poly<C>::one(ring) - a * b;
    auto u_inv = u.try_invert();
    if (!u_inv)
        throw NotAUnit("1 - ab = " + u.to_string());
    StWord<C> head(ring, {{j, i, -(b * *u_inv), false},
                          {i, j, -a, false},
                          {j, i, b, false},
                          {i, j, *u_inv * a, false}});
    return head * expand_h(i, j, u).inverse();
}

} // namespace nilk
