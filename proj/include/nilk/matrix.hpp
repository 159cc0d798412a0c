#pragma once

// Dense matrices over a polynomial ring Poly<C>.
//
// Row/column accessors are 0-based. Elementary matrices use the 1-based
// (i, j) of generator notation, e_12 being the upper off-diagonal of a 2x2.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilk/poly.hpp"
#include "nilk/ring_maps.hpp"

namespace nilk {

template <Coefficient C>
class Matrix {
public:
    using Elem = Poly<C>;

    Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Elem::zero(ring_)) {
        if (rows == 0 || cols == 0)
            throw DimensionMismatch("matrices must have at least one row and column");
    }

    static Matrix zero(RingPtr ring, std::size_t rows, std::size_t cols) { return Matrix(std::move(ring), rows, cols); }
    static Matrix zero(RingPtr ring, std::size_t n) { return Matrix(std::move(ring), n, n); }

    static Matrix identity(RingPtr ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t k = 0; k < n; ++k)
            m(k, k) = Elem::one(ring);
        return m;
    }

    static Matrix from_rows(RingPtr ring, const std::vector<std::vector<Elem>> &rows) {
        if (rows.empty() || rows[0].empty())
            throw DimensionMismatch("empty row list");
        Matrix m(ring, rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_)
                throw DimensionMismatch("ragged rows");
            for (std::size_t c = 0; c < m.cols_; ++c) {
                if (!same_ring(rows[r][c].ring(), ring))
                    throw RingMismatch("entry (" + std::to_string(r) + "," + std::to_string(c) + ") is in " +
                                       rows[r][c].descriptor());
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

    static Matrix diagonal(RingPtr ring, const std::vector<Elem> &diag) {
        Matrix m(ring, diag.size(), diag.size());
        for (std::size_t k = 0; k < diag.size(); ++k)
            m(k, k) = diag[k];
        return m;
    }

    /// Identity with a at (i, j), 1-based, i != j.
    static Matrix elementary(RingPtr ring, std::size_t n, std::size_t i, std::size_t j, const Elem &a) {
        if (i == j)
            throw std::invalid_argument("elementary matrix needs i != j");
        if (i < 1 || j < 1 || i > n || j > n)
            throw DimensionMismatch("elementary index out of range");
        Matrix m = identity(ring, n);
        m(i - 1, j - 1) = a;
        return m;
    }

    const RingPtr &ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::string descriptor() const { return ring_descriptor<C>(ring_); }

    Elem &operator()(std::size_t r, std::size_t c) { return entries_[index(r, c)]; }
    const Elem &operator()(std::size_t r, std::size_t c) const { return entries_[index(r, c)]; }

    const std::vector<Elem> &entries() const { return entries_; }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend Matrix operator+(const Matrix &a, const Matrix &b) {
        a.require_same_shape(b);
        Matrix out = a;
        for (std::size_t k = 0; k < out.entries_.size(); ++k)
            out.entries_[k] += b.entries_[k];
        return out;
    }

    friend Matrix operator-(const Matrix &a, const Matrix &b) {
        a.require_same_shape(b);
        Matrix out = a;
        for (std::size_t k = 0; k < out.entries_.size(); ++k)
            out.entries_[k] -= b.entries_[k];
        return out;
    }

    friend Matrix operator-(const Matrix &a) {
        Matrix out = a;
        for (auto &e : out.entries_)
            e = -e;
        return out;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        a.require_same_ring(b);
        if (a.cols_ != b.rows_)
            throw DimensionMismatch(a.shape() + " * " + b.shape());
        Matrix out(a.ring_, a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Elem &x = a(r, k);
                if (x.is_zero())
                    continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    const Elem &y = b(k, c);
                    if (!y.is_zero())
                        out(r, c) += x * y;
                }
            }
        }
        return out;
    }

    Matrix scaled(const Elem &s) const {
        Matrix out = *this;
        for (auto &e : out.entries_)
            e = s * e;
        return out;
    }

    Matrix transpose() const {
        Matrix out(ring_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(c, r) = (*this)(r, c);
        return out;
    }

    Matrix pow(unsigned k) const {
        require_square("pow");
        Matrix result = identity(ring_, rows_);
        Matrix base = *this;
        while (k > 0) {
            if (k & 1u)
                result = result * base;
            k >>= 1u;
            if (k)
                base = base * base;
        }
        return result;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Elem &e) { return e.is_zero(); });
    }

    bool is_identity() const { return is_square() && *this == identity(ring_, rows_); }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw DimensionMismatch("block out of range");
        Matrix out(ring_, nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c)
                out(r, c) = (*this)(r0 + r, c0 + c);
        return out;
    }

    /// Apply f entrywise, e.g. a ring map or a substitution.
    template <class F>
    auto map(F &&f) const {
        using Out = std::invoke_result_t<F &, const Elem &>;
        std::vector<std::vector<Out>> rows(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                rows[r].push_back(f((*this)(r, c)));
        return Matrix<typename detail_coeff<Out>::type>::from_rows(rows[0][0].ring(), rows);
    }

    /// Row r multiplied on the left by u; u must be a recognized unit.
    Matrix row_scale(std::size_t r, const Elem &u) const {
        require_unit(u);
        Matrix out = *this;
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = u * out(r, c);
        return out;
    }

    /// Column c multiplied on the right by u; u must be a recognized unit.
    Matrix col_scale(std::size_t c, const Elem &u) const {
        require_unit(u);
        Matrix out = *this;
        for (std::size_t r = 0; r < rows_; ++r)
            out(r, c) = out(r, c) * u;
        return out;
    }

    /// Determinant by Laplace expansion along rows, memoized over column subsets.
    Elem det() const {
        require_square("det");
        constexpr std::size_t kMaxDetSize = 16;
        if (rows_ > kMaxDetSize)
            throw DimensionMismatch("det supports n <= " + std::to_string(kMaxDetSize));
        const std::size_t n = rows_;
        // minors[mask] = det of rows 0..popcount(mask)-1 restricted to the columns in mask
        std::vector<std::optional<Elem>> minors(std::size_t{1} << n);
        minors[0] = Elem::one(ring_);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
            Elem acc = Elem::zero(ring_);
            int above = 0; // columns of mask strictly greater than the current one
            for (int col = static_cast<int>(n) - 1; col >= 0; --col) {
                if (!(mask & (1u << col)))
                    continue;
                const Elem &a = (*this)(row, static_cast<std::size_t>(col));
                const auto &rest = minors[mask & ~(1u << col)];
                if (!a.is_zero() && rest && !rest->is_zero()) {
                    Elem term = a * *rest;
                    if (above % 2)
                        acc -= term;
                    else
                        acc += term;
                }
                ++above;
            }
            minors[mask] = std::move(acc);
        }
        return *minors[(1u << n) - 1];
    }

    Matrix minor_matrix(std::size_t skip_r, std::size_t skip_c) const {
        Matrix out(ring_, rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
            if (r == skip_r)
                continue;
            for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
                if (c == skip_c)
                    continue;
                out(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        return out;
    }

    Matrix adjugate() const {
        require_square("adjugate");
        if (rows_ == 1)
            return identity(ring_, 1);
        Matrix adj(ring_, rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                Elem cof = minor_matrix(r, c).det();
                adj(c, r) = (r + c) % 2 ? -cof : cof;
            }
        return adj;
    }

    /// adj(m) / det(m) for n <= 4; nullopt when det is not a recognized unit.
    std::optional<Matrix> inverse_small() const {
        require_square("inverse");
        if (rows_ > 4)
            throw DimensionMismatch("inverse_small supports n <= 4");
        auto det_inv = det().try_invert();
        if (!det_inv)
            return std::nullopt;
        Matrix inv = adjugate().scaled(*det_inv);
        if (!(*this * inv).is_identity())
            throw VerificationFailure("adjugate inverse does not invert");
        return inv;
    }

    bool is_idempotent() const { return is_square() && *this * *this == *this; }

    /// Least k <= max_k with m^k = 0.
    std::optional<unsigned> nilpotency_index(unsigned max_k) const {
        require_square("nilpotency_index");
        Matrix power = *this;
        for (unsigned k = 1; k <= max_k; ++k) {
            if (power.is_zero())
                return k;
            if (k < max_k)
                power = power * *this;
        }
        return std::nullopt;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            out += r ? ", [" : "[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c)
                    out += ", ";
                out += (*this)(r, c).to_string();
            }
            out += "]";
        }
        return out + "]";
    }

    void require_same_ring(const Matrix &b) const {
        if (!same_ring(ring_, b.ring_))
            throw RingMismatch(descriptor() + " vs " + b.descriptor());
    }

private:
    template <class P>
    struct detail_coeff;
    template <class D>
    struct detail_coeff<Poly<D>> {
        using type = D;
    };

    void require_same_shape(const Matrix &b) const {
        require_same_ring(b);
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw DimensionMismatch(shape() + " vs " + b.shape());
    }

    void require_square(const char *what) const {
        if (!is_square())
            throw DimensionMismatch(std::string(what) + " of non-square " + shape());
    }

    void require_unit(const Elem &u) const {
        if (!u.is_unit())
            throw NotAUnit(u.to_string());
    }

    std::size_t index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("entry (" + std::to_string(r) + "," + std::to_string(c) + ") of " + shape());
        return r * cols_ + c;
    }

    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> entries_;
};

/// Block-diagonal sum.
template <Coefficient C>
Matrix<C> direct_sum(const Matrix<C> &a, const Matrix<C> &b) {
    a.require_same_ring(b);
    Matrix<C> out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

template <Coefficient C>
struct BlockPlacement {
    std::size_t row;
    std::size_t col;
    Matrix<C> block;
};

/// rows x cols zero matrix with the given blocks written at their offsets (later ones win).
template <Coefficient C>
Matrix<C> block_assemble(const RingPtr &ring, std::size_t rows, std::size_t cols,
                         const std::vector<BlockPlacement<C>> &blocks) {
    Matrix<C> out(ring, rows, cols);
    for (const auto &[r0, c0, b] : blocks) {
        if (!same_ring(b.ring(), ring))
            throw RingMismatch("block in " + b.descriptor());
        if (r0 + b.rows() > rows || c0 + b.cols() > cols)
            throw DimensionMismatch("block " + b.shape() + " at (" + std::to_string(r0) + "," + std::to_string(c0) +
                                    ") exceeds " + std::to_string(rows) + "x" + std::to_string(cols));
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r0 + r, c0 + c) = b(r, c);
    }
    return out;
}

/// A pair of matrices (first, second) with first - second entrywise in an
/// ideal: an element of M_n of the double ring D(R, I).
template <Coefficient C>
struct DoublePair {
    Matrix<C> first;
    Matrix<C> second;
    IdealSpec ideal;

    DoublePair(Matrix<C> a, Matrix<C> b, IdealSpec spec) : first(std::move(a)), second(std::move(b)), ideal(spec) {
        if (!ideal_member(first - second, ideal))
            throw std::invalid_argument("double pair components differ outside the ideal " + to_string(ideal));
    }

    friend bool operator==(const DoublePair &, const DoublePair &) = default;
};

/// Every entry in the ideal.
template <Coefficient C>
bool ideal_member(const Matrix<C> &m, IdealSpec spec) {
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [spec](const Poly<C> &e) { return ideal_member(e, spec); });
}

template <Coefficient C>
bool in_t2_t3_subring(const Matrix<C> &m) {
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [](const Poly<C> &e) { return in_t2_t3_subring(e); });
}

} // namespace nilk
