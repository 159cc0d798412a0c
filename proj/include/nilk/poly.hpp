#pragma once

// Multivariate polynomials over an exact coefficient ring.
//
// Each variable is ordinary (exponent >= 0), Laurent (exponent in ZZ) or
// truncated (x^bound = 0). Elements are kept in canonical form after every
// operation: no zero coefficients and no monomial at or above a truncation
// bound, so equality is equality of term maps.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilk/errors.hpp"
#include "nilk/scalars.hpp"

namespace nilk {

enum class VarKind { Ordinary, Laurent, Truncated };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Ordinary;
    int bound = 0; // truncated variables only: name^bound == 0

    friend bool operator==(const Variable &, const Variable &) = default;
};

inline Variable ordinary(std::string name) { return {std::move(name), VarKind::Ordinary, 0}; }
inline Variable laurent_var(std::string name) { return {std::move(name), VarKind::Laurent, 0}; }
inline Variable truncated(std::string name, int bound) { return {std::move(name), VarKind::Truncated, bound}; }

/// The variable list of a polynomial ring; the coefficient ring is the Poly template argument.
class PolyRing {
public:
    explicit PolyRing(std::vector<Variable> vars) : vars_(std::move(vars)) {
        for (std::size_t a = 0; a < vars_.size(); ++a) {
            const auto &v = vars_[a];
            if (v.name.empty())
                throw std::invalid_argument("variable with empty name");
            if (v.kind == VarKind::Truncated && v.bound < 1)
                throw std::invalid_argument("truncation bound must be positive for " + v.name);
            for (std::size_t b = 0; b < a; ++b)
                if (vars_[b].name == v.name)
                    throw std::invalid_argument("duplicate variable " + v.name);
        }
    }

    const std::vector<Variable> &variables() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    const Variable &operator[](std::size_t k) const { return vars_[k]; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k].name == name)
                return k;
        return std::nullopt;
    }

    std::size_t require(std::string_view name) const {
        auto k = index_of(name);
        if (!k)
            throw RingMismatch("ring " + suffix() + " has no variable '" + std::string(name) + "'");
        return *k;
    }

    /// "[t,s,z,z^-1]/(t^2)" style suffix appended to the coefficient ring name.
    std::string suffix() const {
        if (vars_.empty())
            return "";
        std::string out = "[";
        std::string quotients;
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (k)
                out += ",";
            out += vars_[k].name;
            if (vars_[k].kind == VarKind::Laurent)
                out += "," + vars_[k].name + "^-1";
            if (vars_[k].kind == VarKind::Truncated)
                quotients += "/(" + vars_[k].name + "^" + std::to_string(vars_[k].bound) + ")";
        }
        return out + "]" + quotients;
    }

    friend bool operator==(const PolyRing &, const PolyRing &) = default;

private:
    std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<Variable> vars) { return std::make_shared<const PolyRing>(std::move(vars)); }

inline bool same_ring(const RingPtr &a, const RingPtr &b) { return a == b || *a == *b; }

template <Coefficient C>
std::string ring_descriptor(const RingPtr &ring) {
    return std::string(coeff_traits<C>::name) + ring->suffix();
}

template <Coefficient C>
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, C>;
    using Traits = coeff_traits<C>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    Poly(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            check_exponents(it->first);
            if (Traits::is_zero(it->second) || truncated_away(it->first))
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    static Poly constant(RingPtr ring, C c) {
        Exponents e(ring->size(), 0);
        return Poly(ring, TermMap{{std::move(e), std::move(c)}});
    }
    static Poly from_int(RingPtr ring, long long v) { return constant(std::move(ring), Traits::from_int(v)); }
    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly one(RingPtr ring) { return constant(std::move(ring), Traits::one()); }

    static Poly variable(RingPtr ring, std::string_view name) {
        Exponents e(ring->size(), 0);
        e[ring->require(name)] = 1;
        return Poly(ring, TermMap{{std::move(e), Traits::one()}});
    }

    static Poly monomial(RingPtr ring, Exponents e, C c) {
        if (e.size() != ring->size())
            throw std::invalid_argument("exponent vector length does not match ring");
        return Poly(ring, TermMap{{std::move(e), std::move(c)}});
    }

    const RingPtr &ring() const { return ring_; }
    const TermMap &terms() const { return terms_; }
    std::string descriptor() const { return ring_descriptor<C>(ring_); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_unit_exponent(terms_.begin()->first));
    }
    bool is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == Traits::one(); }

    C constant_term() const {
        auto it = terms_.find(Exponents(ring_->size(), 0));
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    friend bool operator==(const Poly &a, const Poly &b) { return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_; }

    friend Poly operator+(const Poly &a, const Poly &b) {
        a.require_same(b);
        TermMap out = a.terms_;
        for (const auto &[e, c] : b.terms_) {
            auto [it, fresh] = out.try_emplace(e, c);
            if (!fresh)
                it->second = it->second + c;
        }
        return Poly(a.ring_, std::move(out), Normalized::No);
    }

    friend Poly operator-(const Poly &a) {
        TermMap out;
        for (const auto &[e, c] : a.terms_)
            out.emplace_hint(out.end(), e, -c);
        return Poly(a.ring_, std::move(out), Normalized::No);
    }

    friend Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }

    friend Poly operator*(const Poly &a, const Poly &b) {
        a.require_same(b);
        TermMap out;
        const std::size_t n = a.ring_->size();
        Exponents e(n);
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < n; ++k)
                    e[k] = ea[k] + eb[k];
                if (a.truncated_away(e))
                    continue;
                C prod = ca * cb;
                auto [it, fresh] = out.try_emplace(e, prod);
                if (!fresh)
                    it->second = it->second + prod;
            }
        }
        return Poly(a.ring_, std::move(out), Normalized::No);
    }

    Poly &operator+=(const Poly &b) { return *this = *this + b; }
    Poly &operator-=(const Poly &b) { return *this = *this - b; }
    Poly &operator*=(const Poly &b) { return *this = *this * b; }

    Poly scaled(const C &c) const { return *this * constant(ring_, c); }

    /// Negative powers need a recognized unit; throws NotAUnit otherwise.
    Poly pow(long long k) const {
        Poly base = *this;
        if (k < 0) {
            auto inv = try_invert();
            if (!inv)
                throw NotAUnit(to_string());
            base = *inv;
            k = -k;
        }
        Poly result = one(ring_);
        while (k > 0) {
            if (k & 1)
                result = result * base;
            k >>= 1;
            if (k)
                base = base * base;
        }
        return result;
    }

    /// Inverse when the element is (unit monomial) + (nilpotent); nullopt otherwise.
    ///
    /// The nilpotent part is everything killed by reducing coefficients modulo
    /// their nilradical and setting truncated variables to zero. What remains
    /// must be c * m with c an invertible coefficient and m a monomial in
    /// Laurent variables only; the inverse is then the terminating geometric
    /// series r^-1 * sum (-n r^-1)^k.
    std::optional<Poly> try_invert() const {
        TermMap reduced_terms;
        for (const auto &[e, c] : terms_) {
            bool nil = false;
            for (std::size_t k = 0; k < e.size(); ++k)
                if ((*ring_)[k].kind == VarKind::Truncated && e[k] > 0)
                    nil = true;
            if (!nil)
                reduced_terms.emplace(e, Traits::reduced(c));
        }
        Poly reduced(ring_, std::move(reduced_terms));
        if (reduced.terms_.size() != 1)
            return std::nullopt;
        const auto &[re, rc] = *reduced.terms_.begin();
        for (std::size_t k = 0; k < re.size(); ++k)
            if (re[k] != 0 && (*ring_)[k].kind != VarKind::Laurent)
                return std::nullopt;
        auto rc_inv = Traits::try_invert(rc);
        if (!rc_inv)
            return std::nullopt;
        Exponents inv_e(re.size());
        for (std::size_t k = 0; k < re.size(); ++k)
            inv_e[k] = -re[k];
        Poly r_inv = monomial(ring_, std::move(inv_e), *rc_inv);

        Poly q = -((*this - reduced) * r_inv);
        Poly sum = one(ring_);
        Poly power = one(ring_);
        constexpr int kMaxNilpotencySteps = 256;
        for (int step = 0; step < kMaxNilpotencySteps; ++step) {
            power = power * q;
            if (power.is_zero())
                break;
            sum += power;
        }
        if (!power.is_zero())
            return std::nullopt;
        Poly inv = r_inv * sum;
        if (!(*this * inv).is_one())
            return std::nullopt;
        return inv;
    }

    bool is_unit() const { return try_invert().has_value(); }

    /// Highest exponent of variable `var` among stored terms (nullopt for zero).
    std::optional<int> degree_in(std::size_t var) const {
        std::optional<int> best;
        for (const auto &[e, c] : terms_)
            if (!best || e[var] > *best)
                best = e[var];
        return best;
    }

    std::optional<int> min_degree_in(std::size_t var) const {
        std::optional<int> best;
        for (const auto &[e, c] : terms_)
            if (!best || e[var] < *best)
                best = e[var];
        return best;
    }

    /// The coefficient of var^k, as an element free of var.
    Poly coefficient_of(std::size_t var, int k) const {
        TermMap out;
        for (const auto &[e, c] : terms_) {
            if (e[var] != k)
                continue;
            Exponents f = e;
            f[var] = 0;
            out.emplace(std::move(f), c);
        }
        return Poly(ring_, std::move(out), Normalized::No);
    }

    /// Human-readable canonical form, re-parseable by parse_poly.
    std::string to_string() const { return render(false); }
    std::string to_latex() const { return render(true); }

    void require_same(const Poly &b) const {
        if (!same_ring(ring_, b.ring_))
            throw RingMismatch(descriptor() + " vs " + b.descriptor());
    }

private:
    enum class Normalized { No };

    // Used by arithmetic: exponents are already valid, only zero coefficients need dropping.
    Poly(RingPtr ring, TermMap terms, Normalized) : ring_(std::move(ring)), terms_(std::move(terms)) {
        std::erase_if(terms_, [](const auto &kv) { return Traits::is_zero(kv.second); });
    }

    bool is_unit_exponent(const Exponents &e) const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    bool truncated_away(const Exponents &e) const {
        for (std::size_t k = 0; k < e.size(); ++k) {
            const auto &v = (*ring_)[k];
            if (v.kind == VarKind::Truncated && e[k] >= v.bound)
                return true;
        }
        return false;
    }

    void check_exponents(const Exponents &e) const {
        if (e.size() != ring_->size())
            throw std::invalid_argument("exponent vector length does not match ring " + descriptor());
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] < 0 && (*ring_)[k].kind != VarKind::Laurent)
                throw std::invalid_argument("negative exponent of non-Laurent variable " + (*ring_)[k].name);
    }

    std::string render_monomial(const Exponents &e, bool latex) const {
        std::string out;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            if (!out.empty() && !latex)
                out += "*";
            out += (*ring_)[k].name;
            if (e[k] != 1)
                out += latex ? "^{" + std::to_string(e[k]) + "}" : "^" + std::to_string(e[k]);
        }
        return out;
    }

    std::string render(bool latex) const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto &[e, c] : terms_) {
            std::string mono = render_monomial(e, latex);
            std::string cs = latex ? Traits::to_latex(c) : Traits::to_string(c);
            bool negative = !cs.empty() && cs[0] == '-';
            std::string mag = negative ? cs.substr(1) : cs;
            bool compound = mag.find_first_of("+-") != std::string::npos;
            if (compound) {
                negative = false;
                mag = "(" + cs + ")";
            }
            std::string piece;
            if (mono.empty())
                piece = mag;
            else if (mag == "1")
                piece = mono;
            else
                piece = mag + (latex ? "" : "*") + mono;
            if (out.empty())
                out = negative ? "-" + piece : piece;
            else
                out += (negative ? " - " : " + ") + piece;
        }
        return out;
    }

    RingPtr ring_;
    TermMap terms_;
};

/// Homomorphic evaluation into `target`: variables named in `images` go to the
/// given elements, the rest to the same-named variable of `target`.
/// Coefficients are carried over unchanged.
template <Coefficient C>
Poly<C> substitute(const Poly<C> &p, const std::map<std::string, Poly<C>> &images, const RingPtr &target) {
    const auto &src = *p.ring();
    std::vector<Poly<C>> var_images;
    var_images.reserve(src.size());
    for (std::size_t k = 0; k < src.size(); ++k) {
        const auto &name = src[k].name;
        if (auto it = images.find(name); it != images.end()) {
            if (!same_ring(it->second.ring(), target))
                throw RingMismatch("image of " + name + " is not in the target ring");
            var_images.push_back(it->second);
        } else {
            auto idx = target->index_of(name);
            if (!idx) {
                // variables that never occur need no image
                bool occurs = std::any_of(p.terms().begin(), p.terms().end(),
                                          [k](const auto &kv) { return kv.first[k] != 0; });
                if (occurs)
                    throw RingMismatch("no image for variable " + name + " in target ring");
                var_images.push_back(Poly<C>::zero(target));
                continue;
            }
            if (src[k].kind == VarKind::Laurent && (*target)[*idx].kind != VarKind::Laurent)
                throw RingMismatch("Laurent variable " + name + " must map to a unit");
            var_images.push_back(Poly<C>::variable(target, name));
        }
    }
    // Laurent variables need unit images; only checked when a negative power occurs.
    std::vector<std::optional<Poly<C>>> inverses(src.size());
    Poly<C> out = Poly<C>::zero(target);
    for (const auto &[e, c] : p.terms()) {
        Poly<C> term = Poly<C>::constant(target, c);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] > 0) {
                term = term * var_images[k].pow(e[k]);
            } else if (e[k] < 0) {
                if (!inverses[k]) {
                    inverses[k] = var_images[k].try_invert();
                    if (!inverses[k])
                        throw NotAUnit("image of Laurent variable " + src[k].name + " is " +
                                       var_images[k].to_string());
                }
                term = term * inverses[k]->pow(-e[k]);
            }
        }
        out += term;
    }
    return out;
}

template <Coefficient C>
Poly<C> substitute(const Poly<C> &p, const std::map<std::string, Poly<C>> &images) {
    return substitute(p, images, p.ring());
}

/// Re-express p in a ring containing (at least) the variables p actually uses.
template <Coefficient C>
Poly<C> embed(const Poly<C> &p, const RingPtr &target) {
    if (same_ring(p.ring(), target))
        return p;
    return substitute(p, {}, target);
}

/// Apply f to every coefficient, landing in a ring with the same variable list.
template <Coefficient D, Coefficient C, class F>
Poly<D> map_coefficients(const Poly<C> &p, F &&f) {
    typename Poly<D>::TermMap out;
    for (const auto &[e, c] : p.terms())
        out.emplace(e, f(c));
    return Poly<D>(p.ring(), std::move(out));
}

/// Term-by-term derivative d/dv. Laurent variables are rejected.
template <Coefficient C>
Poly<C> formal_derivative(const Poly<C> &p, std::string_view v) {
    std::size_t k = p.ring()->require(v);
    if ((*p.ring())[k].kind == VarKind::Laurent)
        throw std::invalid_argument("derivative in Laurent variable " + std::string(v) + " is not supported");
    typename Poly<C>::TermMap out;
    for (const auto &[e, c] : p.terms()) {
        if (e[k] == 0)
            continue;
        auto f = e;
        f[k] -= 1;
        C d = c * coeff_traits<C>::from_int(e[k]);
        auto [it, fresh] = out.try_emplace(std::move(f), d);
        if (!fresh)
            it->second = it->second + d;
    }
    return Poly<C>(p.ring(), std::move(out));
}

/// Ring with one more variable appended, unless it is already present.
inline RingPtr adjoin(const RingPtr &ring, const Variable &v) {
    if (auto k = ring->index_of(v.name)) {
        if ((*ring)[*k] != v)
            throw RingMismatch("variable " + v.name + " already present with a different kind");
        return ring;
    }
    auto vars = ring->variables();
    vars.push_back(v);
    return make_ring(std::move(vars));
}

} // namespace nilk
