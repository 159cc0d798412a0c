#pragma once

// Seeded generators of small random ring elements, matrices and words.

#include <cstdint>
#include <random>

#include "nilk/matrix.hpp"
#include "nilk/steinberg.hpp"

namespace nilk {

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

template <Coefficient C>
C random_coeff(RandomSource &rng);

template <>
inline Integer random_coeff<Integer>(RandomSource &rng) {
    return rng.uniform(-5, 5);
}

template <>
inline Rational random_coeff<Rational>(RandomSource &rng) {
    return Rational(rng.uniform(-5, 5), rng.uniform(1, 4));
}

template <>
inline GaussianInt random_coeff<GaussianInt>(RandomSource &rng) {
    return {rng.uniform(-4, 4), rng.uniform(-4, 4)};
}

template <>
inline GroupRingZ4 random_coeff<GroupRingZ4>(RandomSource &rng) {
    return {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
}

template <>
inline F2 random_coeff<F2>(RandomSource &rng) {
    return F2(rng.coin());
}

template <>
inline DualF2 random_coeff<DualF2>(RandomSource &rng) {
    return {rng.coin(), rng.coin()};
}

/// Up to max_terms terms with exponents in [0, max_deg] ([-max_deg, max_deg] for Laurent variables).
template <Coefficient C>
Poly<C> random_poly(RandomSource &rng, const RingPtr &ring, int max_terms = 3, int max_deg = 2) {
    typename Poly<C>::TermMap terms;
    const int n = rng.uniform(0, max_terms);
    for (int k = 0; k < n; ++k) {
        std::vector<int> e(ring->size());
        for (std::size_t v = 0; v < ring->size(); ++v)
            e[v] = (*ring)[v].kind == VarKind::Laurent ? rng.uniform(-max_deg, max_deg) : rng.uniform(0, max_deg);
        C c = random_coeff<C>(rng);
        auto [it, fresh] = terms.try_emplace(e, c);
        if (!fresh)
            it->second = it->second + c;
    }
    return Poly<C>(ring, std::move(terms));
}

template <Coefficient C>
Matrix<C> random_matrix(RandomSource &rng, const RingPtr &ring, std::size_t rows, std::size_t cols,
                        int max_terms = 2, int max_deg = 2) {
    Matrix<C> m(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = random_poly<C>(rng, ring, max_terms, max_deg);
    return m;
}

template <Coefficient C>
StWord<C> random_word(RandomSource &rng, const RingPtr &ring, std::size_t n, std::size_t max_len = 5) {
    StWord<C> w(ring);
    const int len = rng.uniform(0, static_cast<int>(max_len));
    for (int k = 0; k < len; ++k) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n)));
        std::size_t j = i;
        while (j == i)
            j = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n)));
        w.push({i, j, random_poly<C>(rng, ring, 2, 2), rng.coin()});
    }
    return w;
}

} // namespace nilk
