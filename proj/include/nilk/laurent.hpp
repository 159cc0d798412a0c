#pragma once

// A nonzero NK_1 class over Q[t^2, t^3, z, z^-1], built from the unit 1 + st
// of Q[t,s]/(t^2):
//
//   1. lift diag(u, u^-1) to an invertible A over Q[t,s]         (unit_lift)
//   2. clutch: the idempotent pair B = (A^T P (A^T)^-1, P)       (clutching_pair)
//   3. excise to Q[t^2,t^3,s]: e2 = (A^T)^-1 P A^T                (clutch_projector)
//   4. loop by z: [e2] - [P] -> [I + (z-1) e2] - [diag(z, 1)]     (loop_z, normalize_loop)
//   5. split I - rep = sum s^k M_k and form the block companion N  (nil_sse.hpp)
//
// with P = diag(1, 0). Each stage checks the identities it relies on and
// throws VerificationFailure if one does not hold.

#include <optional>
#include <string>
#include <vector>

#include "nilk/matrix.hpp"
#include "nilk/nil_sse.hpp"
#include "nilk/reference.hpp"
#include "nilk/rings.hpp"
#include "nilk/serialize.hpp"

namespace nilk::laurent {

using QPoly = Poly<Rational>;
using QMatrix = Matrix<Rational>;

inline QPoly q(std::string_view text, const RingPtr &ring = rings::ts()) { return parse_poly<Rational>(text, ring); }

/// diag(1, 0)
inline QMatrix projector_p(const RingPtr &ring = rings::ts()) {
    return QMatrix::diagonal(ring, {QPoly::one(ring), QPoly::zero(ring)});
}

/// [[0, -1], [1, 0]]
inline QMatrix rotation(const RingPtr &ring) {
    return QMatrix::from_rows(ring, {{QPoly::zero(ring), QPoly::from_int(ring, -1)},
                                     {QPoly::one(ring), QPoly::zero(ring)}});
}

/// e12(u) e21(-v) e12(u) [[0,-1],[1,0]]; reduces to diag(u, v) wherever uv = 1.
inline QMatrix whitehead_lift(const QPoly &u, const QPoly &v) {
    const auto &ring = u.ring();
    return QMatrix::elementary(ring, 2, 1, 2, u) * QMatrix::elementary(ring, 2, 2, 1, -v) *
           QMatrix::elementary(ring, 2, 1, 2, u) * rotation(ring);
}

/// A lifts diag(u, v) modulo t^2 and has determinant 1.
inline bool is_lift_of(const QMatrix &A, const QPoly &u, const QPoly &v) {
    auto reduced = A.map([](const QPoly &e) { return pi_t2(e); });
    const auto &qring = reduced.ring();
    auto target = QMatrix::diagonal(qring, {pi_t2(u), pi_t2(v)});
    return reduced == target && A.det().is_one();
}

/// The published lift of diag(1 + st, 1 - st).
inline QMatrix unit_lift() {
    QMatrix A = matrix_from_text<Rational>(reference::kUnitLift, rings::ts());
    if (!is_lift_of(A, q("1+s*t"), q("1-s*t")))
        throw VerificationFailure("unit lift does not reduce to diag(1+st, 1-st) with det 1");
    return A;
}

/// (A^T P (A^T)^-1, P) over Q[t,s] relative to (t^2).
inline DoublePair<Rational> clutching_pair(const QMatrix &A) {
    const auto At = A.transpose();
    auto At_inv = At.inverse_small();
    if (!At_inv)
        throw NotAUnit("det of lift " + A.det().to_string());
    const auto P = projector_p(A.ring());
    DoublePair<Rational> pair(At * P * *At_inv, P, IdealSpec::MonomialT2);
    if (!pair.first.is_idempotent())
        throw VerificationFailure("clutching idempotent is not idempotent");
    return pair;
}

/// The published pair (B1, B2), checked idempotent with B1 - B2 in M_2((t^2)).
inline DoublePair<Rational> clutching_idempotent() {
    auto first = matrix_from_text<Rational>(reference::kClutchingFirst, rings::ts());
    auto second = matrix_from_text<Rational>(reference::kClutchingSecond, rings::ts());
    if (!first.is_idempotent() || !second.is_idempotent())
        throw VerificationFailure("published clutching pair is not idempotent");
    return DoublePair<Rational>(first, second, IdealSpec::MonomialT2);
}

/// (A^T)^-1 P A^T. Transposes because the module maps act on row vectors.
inline QMatrix clutch_projector(const QMatrix &A, const QMatrix &P) {
    if (!P.is_idempotent())
        throw std::invalid_argument("clutch_projector needs an idempotent P");
    const auto At = A.transpose();
    auto At_inv = At.inverse_small();
    if (!At_inv)
        throw NotAUnit("det of lift " + A.det().to_string());
    QMatrix e = *At_inv * P * At;
    if (!e.is_idempotent())
        throw VerificationFailure("conjugated projector is not idempotent");
    return e;
}

/// One bookkeeping stage: a formal difference [first, second] - [base_first, base_second].
struct TransportStage {
    std::string name;
    QMatrix first;
    QMatrix second;
    QMatrix base_first;
    QMatrix base_second;

    bool trivial() const { return first == base_first && second == base_second; }
};

/// The class of B carried through K_0(Q[t,s], I) -> K_0(I) -> K_0(Q[t^2,t^3,s], I).
struct ExcisionTransport {
    TransportStage relative_source; // [B1, B2] - [P, P] over D(Q[t,s], I)
    TransportStage unitized;        // [e2 - P, P] - [0, P]: (ideal part, integer part) in I_+
    TransportStage relative_target; // [P, e2] - [P, P] over D(Q[t^2,t^3,s], I)

    bool trivial() const { return relative_source.trivial() && unitized.trivial() && relative_target.trivial(); }
};

namespace detail {

inline bool integral_constants(const QMatrix &m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](const QPoly &e) {
        return e.is_constant() && boost::multiprecision::denominator(e.constant_term()) == 1;
    });
}

} // namespace detail

inline ExcisionTransport excision_transport(const DoublePair<Rational> &B, const QMatrix &e2) {
    const auto P = projector_p(e2.ring());
    const auto zero = QMatrix::zero(e2.ring(), 2);
    auto fail = [](const std::string &why) { throw VerificationFailure("excision transport: " + why); };

    if (B.ideal != IdealSpec::MonomialT2)
        fail("source pair is not relative to (t^2)");
    if (!B.first.is_idempotent() || !B.second.is_idempotent())
        fail("source pair is not idempotent");

    const QMatrix ideal_part = e2 - P;
    if (!ideal_member(ideal_part, IdealSpec::MonomialT2))
        fail("ideal part e2 - P leaves (t^2)");
    if (!detail::integral_constants(P) || !(P + ideal_part).is_idempotent())
        fail("unitized pair is not an idempotent over I_+");

    // (x, n) -> (n, n + x)
    const QMatrix image_first = P;
    const QMatrix image_second = P + ideal_part;
    if (!(image_first == P && image_second == e2))
        fail("unitized pair does not map to (P, e2)");
    if (!in_t2_t3_subring(P) || !in_t2_t3_subring(e2))
        fail("target pair leaves Q[t^2,t^3,s]");
    if (!ideal_member(e2 - P, IdealSpec::MonomialT2))
        fail("target pair components differ outside (t^2)");

    return {{"relative pair over Q[t,s]", B.first, B.second, P, P},
            {"unitized pair over I_+", ideal_part, P, zero, P},
            {"relative pair over Q[t^2,t^3,s]", image_first, image_second, P, P}};
}

/// I + (z - 1) Q over the ring with z, z^-1 adjoined. Q must be idempotent.
inline QMatrix loop_z(const QMatrix &Q) {
    if (!Q.is_idempotent())
        throw std::invalid_argument("loop_z needs an idempotent");
    auto ring = adjoin(Q.ring(), laurent_var("z"));
    auto Qz = Q.map([&](const QPoly &e) { return embed(e, ring); });
    auto z = QPoly::variable(ring, "z");
    return QMatrix::identity(ring, Q.rows()) + Qz.scaled(z - QPoly::one(ring));
}

/// [L] - [diag(z, 1)] as a single class: first column times z^-1.
inline QMatrix normalize_loop(const QMatrix &L) {
    auto z_inv = QPoly::variable(L.ring(), "z").pow(-1);
    return L.col_scale(0, z_inv);
}

/// Substitute s -> 0 entrywise.
inline QMatrix at_s_zero(const QMatrix &m) {
    auto zero = QPoly::zero(m.ring());
    return m.map([&](const QPoly &e) { return substitute(e, {{"s", zero}}); });
}

/// Loop the clutched projector of a lift and normalize; checks det = 1,
/// triviality at s = 0 and membership in Q[t^2,t^3,z,z^-1,s].
inline QMatrix nk1_representative(const QMatrix &lift) {
    const QMatrix e2 = clutch_projector(lift, projector_p(lift.ring()));
    const QMatrix rep = normalize_loop(loop_z(e2));
    if (!rep.det().is_one())
        throw VerificationFailure("representative has det " + rep.det().to_string());
    if (!at_s_zero(rep).is_identity())
        throw VerificationFailure("representative is not the identity at s = 0");
    if (!in_t2_t3_subring(rep))
        throw VerificationFailure("representative leaves Q[t^2,t^3,z,z^-1,s]");
    return rep;
}

/// The representative built from the published lift.
inline QMatrix laurent_representative() { return nk1_representative(unit_lift()); }

/// Everything the construction produces for the starting unit a + b s t.
struct LaurentRun {
    Rational a;
    Rational b;
    QPoly unit;
    QPoly inverse_lift;
    QMatrix lift;
    DoublePair<Rational> clutching;
    QMatrix projector;
    ExcisionTransport transport;
    QMatrix loop;
    QMatrix representative;
    std::vector<QMatrix> blocks;
    std::optional<QMatrix> companion; // absent when the representative is I (b = 0)
};

/// Full construction for u = a + b s t (a != 0), lifting u^-1 as a^-1 - a^-2 b s t.
inline LaurentRun run_construction(const Rational &a, const Rational &b) {
    if (a == 0)
        throw NotAUnit("a + b s t with a = 0");
    const auto &ring = rings::ts();
    const QPoly st = q("s*t");
    const QPoly u = QPoly::constant(ring, a) + st.scaled(b);
    const QPoly v = QPoly::constant(ring, Rational(1) / a) - st.scaled(b / (a * a));
    QMatrix lift = whitehead_lift(u, v);
    if (!is_lift_of(lift, u, v))
        throw VerificationFailure("Whitehead product is not a lift of diag(u, u^-1)");
    auto clutching = clutching_pair(lift);
    QMatrix projector = clutch_projector(lift, projector_p(ring));
    auto transport = excision_transport(clutching, projector);
    QMatrix loop = loop_z(projector);
    QMatrix rep = nk1_representative(lift);
    auto blocks = decompose_by_degree(rep, "s");
    std::optional<QMatrix> companion;
    if (!blocks.empty())
        companion = higman_companion(blocks);
    return {a, b, u, v, std::move(lift), std::move(clutching), std::move(projector), std::move(transport),
            std::move(loop), std::move(rep), std::move(blocks), std::move(companion)};
}

} // namespace nilk::laurent
