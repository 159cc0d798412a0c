#pragma once

// A nonzero NK_1 class over ZZ[C4], from the Dennis-Stein symbol <e, x + e>
// of F2[e]/(e^2)[x] pushed through the Milnor square
//
//      ZZ[C4][x] --psi--> ZZ[i][x]
//          |                 | rho
//      ZZ[C2][x] ------> F2[e]/(e^2)[x]
//
// The boundary of the symbol is the class of the word Y Z over ZZ[i][x]
// relative to (2); psi maps (1 - sigma^2) isomorphically onto (2), which
// lets the class be lifted back to ZZ[C4][x].

#include <string>

#include "nilk/matrix.hpp"
#include "nilk/reference.hpp"
#include "nilk/ring_maps.hpp"
#include "nilk/rings.hpp"
#include "nilk/serialize.hpp"
#include "nilk/steinberg.hpp"

namespace nilk::groupring {

using GPoly = Poly<GaussianInt>;
using GMatrix = Matrix<GaussianInt>;
using ZGPoly = Poly<GroupRingZ4>;
using ZGMatrix = Matrix<GroupRingZ4>;
using DPoly = Poly<DualF2>;
using DMatrix = Matrix<DualF2>;

template <Coefficient C, std::size_t N>
StWord<C> word_from_text(const std::array<reference::LetterText, N> &letters, const RingPtr &ring) {
    StWord<C> w(ring);
    for (const auto &l : letters)
        w.push({l.i, l.j, parse_poly<C>(l.param, ring), false});
    return w;
}

inline StWord<GaussianInt> word_y() { return word_from_text<GaussianInt>(reference::kWordY, rings::x()); }
inline StWord<GaussianInt> word_z() { return word_from_text<GaussianInt>(reference::kWordZ, rings::x()); }

/// x21(-x-e-e x^2) x12(-e) x21(x+e) x12(e) h12(1 - e x)^-1 over F2[e]/(e^2)[x].
inline StWord<DualF2> reduced_x_word() {
    const auto &ring = rings::x();
    auto head = word_from_text<DualF2>(reference::kWordXHead, ring);
    return head * expand_h(1, 2, parse_poly<DualF2>(reference::kWordXHUnit, ring)).inverse();
}

inline StWord<DualF2> symbol_e_x_plus_e() {
    const auto &ring = rings::x();
    return dennis_stein_word(1, 2, parse_poly<DualF2>("e", ring), parse_poly<DualF2>("x+e", ring));
}

/// A matrix over ZZ[i][x] congruent to I modulo (2) with determinant 1.
class RelativeRep {
public:
    explicit RelativeRep(GMatrix m) : m_(std::move(m)) {
        if (!m_.is_square())
            throw DimensionMismatch("relative representative must be square");
        const auto I = GMatrix::identity(m_.ring(), m_.rows());
        if (!ideal_member(m_ - I, IdealSpec::PrincipalTwo))
            throw VerificationFailure("matrix is not congruent to I modulo (2)");
        if (!m_.det().is_one())
            throw VerificationFailure("relative representative has det " + m_.det().to_string());
    }

    const GMatrix &matrix() const { return m_; }

private:
    GMatrix m_;
};

/// eval(Y Z) in GL_2(ZZ[i][x]), checked to lie in GL_2(ZZ[i][x], (2)).
inline RelativeRep yz_matrix() { return RelativeRep((word_y() * word_z()).eval(2)); }

/// Entrywise i -> 1 + e, coefficients mod 2.
inline DMatrix reduce_to_dual(const GMatrix &m) {
    return m.map([](const GPoly &e) { return rho(e); });
}

inline DMatrix reduce_to_dual(const RelativeRep &m) { return reduce_to_dual(m.matrix()); }

/// Entrywise delta + (1 - sigma^2) * lift(g) where entry - delta = 2 g;
/// checked to map back under psi and to have det 1.
inline ZGMatrix lift_to_group_ring(const RelativeRep &rep) {
    const GMatrix &m = rep.matrix();
    const auto &ring = m.ring();
    const ZGPoly one_minus_sigma_sq = parse_poly<GroupRingZ4>("1-sigma^2", ring);
    ZGMatrix out(ring, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const GPoly delta = r == c ? GPoly::one(ring) : GPoly::zero(ring);
            const GPoly g = halve(m(r, c) - delta);
            out(r, c) = canonical_lift(delta) + one_minus_sigma_sq * canonical_lift(g);
        }
    if (!(out.map([](const ZGPoly &e) { return psi(e); }) == m))
        throw VerificationFailure("lift does not map back to the relative representative");
    if (!out.det().is_one())
        throw VerificationFailure("lift has det " + out.det().to_string());
    return out;
}

inline ZGMatrix published_group_ring_matrix() {
    return matrix_from_text<GroupRingZ4>(reference::kGroupRingRepresentative, rings::x());
}

/// Diagonal entries in 1 + (1 - sigma^2), off-diagonal entries in (1 - sigma^2).
inline bool has_relative_shape(const ZGMatrix &m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            ZGPoly e = r == c ? m(r, c) - ZGPoly::one(m.ring()) : m(r, c);
            if (!ideal_member(e, IdealSpec::PrincipalOneMinusSigmaSq))
                return false;
        }
    return true;
}

inline ZGMatrix at_x_zero(const ZGMatrix &m) {
    auto zero = ZGPoly::zero(m.ring());
    return m.map([&](const ZGPoly &e) { return substitute(e, {{"x", zero}}); });
}

inline const RingPtr &f2_x() { return rings::x(); }

/// D(<e, x + e>) = 1 dx.
inline DifferentialF2 symbol_differential() {
    const auto &ring = rings::x();
    return dennis_stein_d(parse_poly<DualF2>("e", ring), parse_poly<DualF2>("x+e", ring), f2_x());
}

} // namespace nilk::groupring
