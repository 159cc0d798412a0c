#pragma once

// The fixed ring maps, ideals and subrings used by the two constructions:
//
//   pi_t2            Q[t,...] -> Q[t,...]/(t^2)        truncate t-degree >= 2
//   psi              ZZ[C4][x] -> ZZ[i][x]             sigma -> i
//   rho              ZZ[i][x] -> F2[e]/(e^2)[x]        i -> 1 + e, coefficients mod 2
//   canonical_lift   ZZ[i][x] -> ZZ[C4][x]             a + b i -> a + b sigma (set map, a section of psi)

#include <string>

#include "nilk/poly.hpp"

namespace nilk {

inline GaussianInt psi(const GroupRingZ4 &g) { return {g.c[0] - g.c[2], g.c[1] - g.c[3]}; }

inline DualF2 rho(const GaussianInt &g) {
    bool a = !detail::is_even(g.re);
    bool b = !detail::is_even(g.im);
    return {a != b, b};
}

inline GroupRingZ4 canonical_lift(const GaussianInt &g) { return {g.re, g.im, 0, 0}; }

inline Poly<GaussianInt> psi(const Poly<GroupRingZ4> &p) {
    return map_coefficients<GaussianInt>(p, [](const GroupRingZ4 &c) { return psi(c); });
}

inline Poly<DualF2> rho(const Poly<GaussianInt> &p) {
    return map_coefficients<DualF2>(p, [](const GaussianInt &c) { return rho(c); });
}

inline Poly<GroupRingZ4> canonical_lift(const Poly<GaussianInt> &p) {
    return map_coefficients<GroupRingZ4>(p, [](const GaussianInt &c) { return canonical_lift(c); });
}

/// The ring p lives in, with t made truncated at degree 2.
inline RingPtr truncation_ring(const RingPtr &ring) {
    auto vars = ring->variables();
    auto &t = vars[ring->require("t")];
    if (t.kind == VarKind::Laurent)
        throw RingMismatch("t is a Laurent variable in " + ring->suffix());
    t.kind = VarKind::Truncated;
    t.bound = 2;
    return make_ring(std::move(vars));
}

inline Poly<Rational> pi_t2(const Poly<Rational> &p) {
    auto target = truncation_ring(p.ring());
    typename Poly<Rational>::TermMap terms(p.terms().begin(), p.terms().end());
    return Poly<Rational>(target, std::move(terms));
}

/// Which ideal a membership test refers to.
enum class IdealSpec {
    MonomialT2,              // (t^2) in Q[t,...]
    PrincipalTwo,            // (2) in ZZ[i][x]
    PrincipalOneMinusSigmaSq // (1 - sigma^2) in ZZ[C4][x]
};

inline std::string to_string(IdealSpec spec) {
    switch (spec) {
    case IdealSpec::MonomialT2:
        return "(t^2)";
    case IdealSpec::PrincipalTwo:
        return "(2)";
    case IdealSpec::PrincipalOneMinusSigmaSq:
        return "(1-sigma^2)";
    }
    return "?";
}

/// (1 - sigma^2) h has coefficients (h0-h2, h1-h3, h2-h0, h3-h1), so membership
/// is c2 = -c0 and c3 = -c1 coefficientwise.
inline bool in_one_minus_sigma_sq(const GroupRingZ4 &c) { return c.c[2] == -c.c[0] && c.c[3] == -c.c[1]; }

template <Coefficient C>
bool ideal_member(const Poly<C> &p, IdealSpec spec) {
    switch (spec) {
    case IdealSpec::MonomialT2: {
        if constexpr (std::is_same_v<C, Rational>) {
            std::size_t t = p.ring()->require("t");
            for (const auto &[e, c] : p.terms())
                if (e[t] < 2)
                    return false;
            return true;
        }
        break;
    }
    case IdealSpec::PrincipalTwo:
        if constexpr (std::is_same_v<C, GaussianInt>) {
            for (const auto &[e, c] : p.terms())
                if (!detail::is_even(c.re) || !detail::is_even(c.im))
                    return false;
            return true;
        }
        break;
    case IdealSpec::PrincipalOneMinusSigmaSq:
        if constexpr (std::is_same_v<C, GroupRingZ4>) {
            for (const auto &[e, c] : p.terms())
                if (!in_one_minus_sigma_sq(c))
                    return false;
            return true;
        }
        break;
    }
    throw RingMismatch("ideal " + to_string(spec) + " is not an ideal of " + p.descriptor());
}

/// Membership in Q[t^2, t^3, ...]: no monomial has t-exponent exactly 1.
template <Coefficient C>
bool in_t2_t3_subring(const Poly<C> &p) {
    std::size_t t = p.ring()->require("t");
    for (const auto &[e, c] : p.terms())
        if (e[t] == 1)
            return false;
    return true;
}

/// Exact halving of a Gaussian polynomial; throws if some coefficient part is odd.
inline Poly<GaussianInt> halve(const Poly<GaussianInt> &p) {
    typename Poly<GaussianInt>::TermMap out;
    for (const auto &[e, c] : p.terms()) {
        if (!detail::is_even(c.re) || !detail::is_even(c.im))
            throw std::domain_error("not divisible by 2: " + p.to_string());
        out.emplace(e, GaussianInt{c.re / 2, c.im / 2});
    }
    return Poly<GaussianInt>(p.ring(), std::move(out));
}

/// Kahler differential f dg of F2[x], stored as its dx-coefficient.
struct DifferentialF2 {
    Poly<F2> coefficient;

    bool is_zero() const { return coefficient.is_zero(); }
    std::string to_string() const {
        if (coefficient.is_zero())
            return "0";
        if (coefficient.is_one())
            return "dx";
        return "(" + coefficient.to_string() + ")*dx";
    }
    friend bool operator==(const DifferentialF2 &, const DifferentialF2 &) = default;
};

inline DifferentialF2 kahler_d(const Poly<F2> &f, const Poly<F2> &g) {
    return {f * formal_derivative(g, "x")};
}

/// Splits h = h0 + h1 e over F2[e]/(e^2)[x] into (h0, h1) over F2[x].
inline std::pair<Poly<F2>, Poly<F2>> split_dual(const Poly<DualF2> &h, const RingPtr &f2_ring) {
    if (!(*f2_ring == *h.ring()))
        throw RingMismatch("F2 ring must have the same variables as " + h.descriptor());
    typename Poly<F2>::TermMap lo, hi;
    for (const auto &[e, c] : h.terms()) {
        if (c.a)
            lo.emplace(e, F2(true));
        if (c.b)
            hi.emplace(e, F2(true));
    }
    return {Poly<F2>(f2_ring, std::move(lo)), Poly<F2>(f2_ring, std::move(hi))};
}

/// D on a Dennis-Stein symbol <f e, g + g' e>: requires the first slot to be a
/// multiple of e, and returns f dg.
inline DifferentialF2 dennis_stein_d(const Poly<DualF2> &a, const Poly<DualF2> &b, const RingPtr &f2_ring) {
    auto [a0, a1] = split_dual(a, f2_ring);
    if (!a0.is_zero())
        throw std::invalid_argument("first slot of the symbol is not a multiple of e: " + a.to_string());
    auto [b0, b1] = split_dual(b, f2_ring);
    (void)b1;
    return kahler_d(a1, b0);
}

} // namespace nilk
