#pragma once

// Assembles every check into one ordered VerificationReport.

#include <cstdint>

#include "nilk/groupring.hpp"
#include "nilk/laurent.hpp"
#include "nilk/nil_sse.hpp"
#include "nilk/random.hpp"
#include "nilk/report.hpp"
#include "nilk/selfcheck.hpp"

namespace nilk {

struct VerifyOptions {
    std::uint64_t seed = 20260101;
    std::size_t property_cases = 1000;
    std::size_t generalized_units = 50;
};

namespace detail {

template <Coefficient C>
json both(const Matrix<C> &computed, const Matrix<C> &expected) {
    return {{"computed", to_json(computed)}, {"expected", to_json(expected)}};
}

template <Coefficient C>
void compare_matrix(VerificationReport &rep, std::string id, std::string anchor, const Matrix<C> &computed,
                    const Matrix<C> &expected) {
    rep.expect(std::move(id), std::move(anchor), computed == expected, computed.to_string(), expected.to_string());
}

template <Coefficient C>
void compare_display_matrix(VerificationReport &rep, std::string id, std::string anchor, const Matrix<C> &computed,
                            const Matrix<C> &expected) {
    const bool eq = computed == expected;
    rep.compare_display(std::move(id), std::move(anchor), eq, computed.to_string(), expected.to_string(),
                        eq ? json(nullptr) : both(computed, expected));
}

/// Runs a stage that signals failure by throwing; records the message.
template <class F>
void expect_no_throw(VerificationReport &rep, std::string id, std::string anchor, F &&f, std::string expected) {
    try {
        std::string computed = f();
        rep.expect(std::move(id), std::move(anchor), true, std::move(computed), std::move(expected));
    } catch (const std::exception &e) {
        rep.expect(std::move(id), std::move(anchor), false, e.what(), std::move(expected));
    }
}

} // namespace detail

/// The Laurent construction checked stage by stage against the published displays.
inline VerificationReport laurent_report() {
    using namespace laurent;
    VerificationReport rep;
    const auto &ts = rings::ts();
    const auto &tsz = rings::tsz();

    // lift
    const QMatrix A = matrix_from_text<Rational>(reference::kUnitLift, ts);
    const QPoly u = q("1+s*t"), v = q("1-s*t");
    {
        auto reduced = A.map([](const QPoly &e) { return pi_t2(e); });
        auto target = QMatrix::diagonal(reduced.ring(), {pi_t2(u), pi_t2(v)});
        nilk::detail::compare_matrix(rep, "lift reduces to diag(1+st, 1-st)", "laurent/lift", reduced, target);
    }
    rep.expect("det(A) = 1", "laurent/lift", A.det().is_one(), A.det().to_string(), "1");
    nilk::detail::compare_matrix(rep, "e12(u) e21(-v) e12(u) w = A", "laurent/lift", whitehead_lift(u, v), A);
    {
        const QPoly p = q(reference::kUnitLiftFactorParam), mid = q(reference::kUnitLiftMiddleFactorParam);
        const auto e12 = QMatrix::elementary(ts, 2, 1, 2, p), e21 = QMatrix::elementary(ts, 2, 2, 1, mid);
        const auto w = rotation(ts);
        nilk::detail::compare_display_matrix(rep, "displayed factors of A, left to right", "laurent/lift",
                                       e12 * e21 * e12 * w, A);
        nilk::detail::compare_display_matrix(rep, "displayed factors of A, right to left", "laurent/lift",
                                       w * e12 * e21 * e12, A);
    }

    // clutching
    const QMatrix P = projector_p(ts);
    const auto published = clutching_idempotent();
    rep.expect("B1^2 = B1", "laurent/clutching", published.first.is_idempotent());
    rep.expect("B2^2 = B2", "laurent/clutching", published.second.is_idempotent());
    rep.expect("B1 - P in M_2((t^2))", "laurent/clutching",
               ideal_member(published.first - P, IdealSpec::MonomialT2), (published.first - P).to_string());
    const auto computed_pair = clutching_pair(A);
    nilk::detail::compare_matrix(rep, "A^T P (A^T)^-1 = B1", "laurent/clutching", computed_pair.first, published.first);

    // projector
    const QMatrix e2 = clutch_projector(A, P);
    rep.expect("e2^2 = e2", "laurent/excision", e2.is_idempotent());
    rep.expect("e2 - P in M_2((t^2))", "laurent/excision", ideal_member(e2 - P, IdealSpec::MonomialT2),
               (e2 - P).to_string());
    rep.expect("e2 entries in QQ[t^2,t^3,s]", "laurent/excision", in_t2_t3_subring(e2), e2.to_string());
    nilk::detail::compare_matrix(rep, "e2 = (A^T)^-1 P A^T (s^2 t^2 reading)", "laurent/excision", e2,
                           matrix_from_text<Rational>(reference::kProjectorCorrected, ts));
    nilk::detail::compare_display_matrix(rep, "e2 against display", "laurent/excision", e2,
                                   matrix_from_text<Rational>(reference::kProjectorAsDisplayed, ts));
    nilk::detail::expect_no_throw(
        rep, "excision transport", "laurent/excision",
        [&] {
            auto t = excision_transport(published, e2);
            return t.relative_source.name + " -> " + t.unitized.name + " -> " + t.relative_target.name;
        },
        "[B1, B2] -> [P, e2]");

    // loop and normalization
    const QMatrix loop = loop_z(e2);
    nilk::detail::compare_matrix(rep, "I + (z-1) e2 = display", "laurent/loop-z", loop,
                           matrix_from_text<Rational>(reference::kLoopOfProjector, tsz));
    {
        auto z_inv = QPoly::variable(tsz, "z").pow(-1);
        auto e2z = e2.map([&](const QPoly &e) { return embed(e, tsz); });
        auto back = QMatrix::identity(tsz, 2) + e2z.scaled(z_inv - QPoly::one(tsz));
        rep.expect("(I + (z-1) e2)(I + (z^-1 - 1) e2) = I", "laurent/loop-z", (loop * back).is_identity());
        nilk::detail::compare_matrix(rep, "I + (z-1) P = diag(z, 1)", "laurent/loop-z", loop_z(P),
                               QMatrix::diagonal(tsz, {QPoly::variable(tsz, "z"), QPoly::one(tsz)}));
    }
    const QMatrix normalized = normalize_loop(loop);
    nilk::detail::compare_matrix(rep, "first column times z^-1 = display", "laurent/normalize", normalized,
                           matrix_from_text<Rational>(reference::kNormalizedIntermediate, tsz));

    // representative
    const QMatrix R = laurent_representative();
    const QMatrix shown = matrix_from_text<Rational>(reference::kLaurentRepresentativeAsDisplayed, tsz);
    for (auto [r, c] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}})
        rep.expect("representative entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = display",
                   "laurent/representative", R(r, c) == shown(r, c), R(r, c).to_string(), shown(r, c).to_string());
    const QPoly self_consistent = q("1-(1-z^-1)*s^4*t^4", tsz);
    rep.expect("representative entry (1,1) = 1-(1-z^-1)s^4t^4", "laurent/representative",
               R(0, 0) == self_consistent, R(0, 0).to_string(), self_consistent.to_string());
    rep.compare_display("representative entry (1,1) against display", "laurent/representative",
                        R(0, 0) == shown(0, 0), R(0, 0).to_string(), shown(0, 0).to_string(),
                        R(0, 0) == shown(0, 0) ? json(nullptr) : nilk::detail::both(R, shown));
    rep.expect("det(representative) = 1", "laurent/representative", R.det().is_one(), R.det().to_string(), "1");
    rep.expect("representative at s = 0 is I", "laurent/representative", at_s_zero(R).is_identity(),
               at_s_zero(R).to_string(), "I");
    rep.expect("representative in QQ[t^2,t^3,z,z^-1,s]", "laurent/representative", in_t2_t3_subring(R));

    // Higman
    const QMatrix M = QMatrix::identity(tsz, 2) - R;
    nilk::detail::compare_matrix(rep, "I - representative = display", "laurent/higman", M,
                           matrix_from_text<Rational>(reference::kNilpotentPart, tsz));
    const auto blocks = decompose_by_degree(R, "s");
    rep.expect("five blocks M_1..M_5", "laurent/higman", blocks.size() == 5, std::to_string(blocks.size()), "5");
    const QMatrix N_shown = matrix_from_text<Rational>(reference::kCompanion10, tsz);
    for (std::size_t k = 0; k < blocks.size() && k < 5; ++k)
        nilk::detail::compare_matrix(rep, "M_" + std::to_string(k + 1) + " = display block", "laurent/higman", blocks[k],
                               N_shown.block(0, 2 * k, 2, 2));
    nilk::detail::compare_matrix(rep, "recompose(M_1..M_5) = representative", "laurent/higman", recompose(blocks, "s"), R);
    const QMatrix N = higman_companion(blocks);
    nilk::detail::compare_matrix(rep, "companion = 10x10 display", "laurent/higman", N, N_shown);
    {
        auto idx = N.nilpotency_index(10);
        rep.expect("N^10 = 0", "laurent/higman", N.pow(10).is_zero(), idx ? "index " + std::to_string(*idx) : "none",
                   "index <= 10");
        auto s = QPoly::variable(tsz, "s");
        auto d = (QMatrix::identity(tsz, 10) - N.scaled(s)).det();
        rep.expect("det(I - sN) = 1", "laurent/higman", d.is_one(), d.to_string(), "1");
        bool s_free = std::all_of(N.entries().begin(), N.entries().end(),
                                  [&](const QPoly &e) { return !e.degree_in(tsz->require("s")).value_or(0); });
        rep.expect("N in QQ[t^2,t^3,z,z^-1]", "laurent/higman", s_free && in_t2_t3_subring(N));
    }
    return rep;
}

/// Verschiebung and Frobenius on a nilpotent representative.
inline VerificationReport nil_maps_report(const Matrix<Rational> &N) {
    VerificationReport rep;
    const auto V2 = verschiebung(N, 2);
    auto idx = V2.nilpotency_index(static_cast<unsigned>(V2.rows()));
    rep.expect("verschiebung(N, 2) is nilpotent", "nil/verschiebung", V2.rows() == 20 && idx.has_value(),
               V2.shape() + (idx ? ", index " + std::to_string(*idx) : ", not nilpotent"), "20x20, nilpotent");
    rep.expect("verschiebung(N, 1) = N", "nil/verschiebung", verschiebung(N, 1) == N);
    rep.expect("frobenius(N, 10) = 0", "nil/frobenius", frobenius(N, 10).is_zero());
    return rep;
}

/// The group-ring construction.
inline VerificationReport groupring_report() {
    using namespace groupring;
    VerificationReport rep;
    const auto &x = rings::x();

    rep.expect("eval <e, x+e> = I", "groupring/symbol", symbol_e_x_plus_e().eval(2).is_identity());
    rep.expect("eval X = I", "groupring/symbol", reduced_x_word().eval(2).is_identity());

    const GMatrix YZ = (word_y() * word_z()).eval(2);
    rep.expect("det(YZ) = 1", "groupring/yz", YZ.det().is_one(), YZ.det().to_string(), "1");
    rep.expect("YZ - I in M_2((2))", "groupring/yz",
               ideal_member(YZ - GMatrix::identity(x, 2), IdealSpec::PrincipalTwo), YZ.to_string());
    const RelativeRep rel(YZ);
    rep.expect("reduce_to_dual(YZ) = I", "groupring/reduction", reduce_to_dual(rel).is_identity(),
               reduce_to_dual(rel).to_string(), "I");

    const ZGMatrix lift = lift_to_group_ring(rel);
    nilk::detail::compare_matrix(rep, "psi(lift) = YZ", "groupring/lift", lift.map([](const ZGPoly &e) { return psi(e); }),
                           YZ);
    rep.expect("det(lift) = 1", "groupring/lift", lift.det().is_one(), lift.det().to_string(), "1");
    rep.expect("lift has relative shape", "groupring/lift", has_relative_shape(lift));
    const ZGMatrix shown = published_group_ring_matrix();
    nilk::detail::compare_display_matrix(rep, "lift against display", "groupring/lift", lift, shown);
    nilk::detail::compare_matrix(rep, "psi(display) = YZ", "groupring/lift", shown.map([](const ZGPoly &e) { return psi(e); }),
                           YZ);

    const ZGMatrix at0 = at_x_zero(shown);
    rep.expect("display at x = 0 has det 1", "groupring/specialization", at0.det().is_one(), at0.to_string(),
               "det 1");

    // I - lift (lift at x=0)^-1 is divisible by x; its companion is 12x12.
    nilk::detail::expect_no_throw(
        rep, "companion of the lift is nilpotent", "groupring/higman",
        [&] {
            auto inv = at_x_zero(lift).inverse_small();
            if (!inv)
                throw NotAUnit("lift at x = 0");
            auto blocks = decompose_by_degree(lift * *inv, "x");
            auto N = higman_companion(blocks);
            return N.shape() + ", index " + std::to_string(*N.nilpotency_index(static_cast<unsigned>(N.rows())));
        },
        "12x12, nilpotent");

    const auto D = symbol_differential();
    rep.expect("D(<e, x+e>) = dx", "groupring/kahler", D.coefficient.is_one(), D.to_string(), "dx");
    const auto &f2 = f2_x();
    const auto dx = kahler_d(Poly<F2>::one(f2), Poly<F2>::variable(f2, "x"));
    rep.expect("kahler_d(1, x) = dx != 0", "groupring/kahler", dx.coefficient.is_one() && !dx.is_zero(),
               dx.to_string(), "dx");
    const auto dsq = kahler_d(Poly<F2>::variable(f2, "x"), parse_poly<F2>("x^2", f2));
    rep.expect("kahler_d(x, x^2) = 0", "groupring/kahler", dsq.is_zero(), dsq.to_string(), "0");
    return rep;
}

/// The trivial witnesses are accepted; a single-entry perturbation of each is rejected.
inline VerificationReport sse_report(const Matrix<Rational> &N) {
    VerificationReport rep;
    const auto &ring = N.ring();
    using QM = Matrix<Rational>;
    const auto one = Poly<Rational>::one(ring);
    auto bump = [&](QM m, std::size_t r, std::size_t c) {
        QM out = m;
        out(r, c) = out(r, c) + one;
        return out;
    };
    auto record = [&](const std::string &id, const WitnessResult &r, bool want_ok) {
        rep.expect(id, "sse/witness", r.ok == want_ok, r.ok ? "accepted" : "rejected: " + r.failure,
                   want_ok ? "accepted" : "rejected");
    };

    // A ~ A (+) 0 via U = [A | 0], V = [I ; 0]
    {
        const std::size_t n = 2;
        const QM A = N.block(0, 2, n, n);
        QM U(ring, n, n + 1), V(ring, n + 1, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c)
                U(r, c) = A(r, c);
            V(r, r) = one;
        }
        QM B(ring, n + 1, n + 1);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                B(r, c) = A(r, c);
        record("ESSE A ~ A (+) 0 accepted", verify_esse(A, B, ESSEWitness<Rational>{U, V}), true);
        record("ESSE A ~ A (+) 0 rejected after perturbing U", verify_esse(A, B, ESSEWitness<Rational>{bump(U, 0, n), V}),
               false);
    }
    // [[0,1],[0,0]] ~ (0) via U = (1, 0)^T, V = (0, 1)
    {
        QM A = QM::elementary(ring, 2, 1, 2, one) - QM::identity(ring, 2);
        QM B(ring, 1, 1), U(ring, 2, 1), V(ring, 1, 2);
        U(0, 0) = one;
        V(0, 1) = one;
        record("ESSE [[0,1],[0,0]] ~ (0) accepted", verify_esse(A, B, ESSEWitness<Rational>{U, V}), true);
        record("ESSE [[0,1],[0,0]] ~ (0) rejected after perturbing V",
               verify_esse(A, B, ESSEWitness<Rational>{U, bump(V, 0, 0)}), false);
    }
    // N ~_SE (0) with lag 10
    {
        QM B(ring, 1, 1), U(ring, N.rows(), 1), V(ring, 1, N.rows());
        record("SE N ~ (0) with lag 10 accepted", verify_se(N, B, SEWitness<Rational>{U, V, 10}), true);
        record("SE N ~ (0) rejected after perturbing U", verify_se(N, B, SEWitness<Rational>{bump(U, 0, 0), V, 10}),
               false);
    }
    return rep;
}

/// The construction for random units a + b s t.
inline VerificationReport generalized_report(std::uint64_t seed, std::size_t count) {
    VerificationReport rep;
    RandomSource rng(seed);
    std::size_t ok = 0;
    std::string first_failure;
    for (std::size_t k = 0; k < count; ++k) {
        Rational a(0);
        while (a == 0)
            a = Rational(rng.uniform(-9, 9), rng.uniform(1, 6));
        Rational b(rng.uniform(-9, 9), rng.uniform(1, 6));
        try {
            auto run = laurent::run_construction(a, b);
            const auto &R = run.representative;
            if (R.det().is_one() && laurent::at_s_zero(R).is_identity() && in_t2_t3_subring(R))
                ++ok;
            else if (first_failure.empty())
                first_failure = "a = " + a.str() + ", b = " + b.str();
        } catch (const std::exception &e) {
            if (first_failure.empty())
                first_failure = "a = " + a.str() + ", b = " + b.str() + ": " + e.what();
        }
    }
    rep.expect("random units a + bst give valid representatives", "laurent/generalized", ok == count && count > 0,
               std::to_string(ok) + "/" + std::to_string(count) + (first_failure.empty() ? "" : "; " + first_failure),
               std::to_string(count) + "/" + std::to_string(count));
    return rep;
}

inline VerificationReport property_report(std::uint64_t seed, std::size_t cases) {
    VerificationReport rep;
    for (const auto &p : run_property_suites(seed, cases))
        rep.expect("property: " + p.name, "property", p.ok(),
                   std::to_string(p.cases - p.failures) + "/" + std::to_string(p.cases) +
                       (p.first_failure.empty() ? "" : "; " + p.first_failure),
                   std::to_string(p.cases) + "/" + std::to_string(p.cases));
    return rep;
}

inline VerificationReport verify_all(const VerifyOptions &opts = {}) {
    VerificationReport rep = laurent_report();
    const auto N = laurent::run_construction(1, 1).companion.value();
    rep.append(nil_maps_report(N));
    rep.append(groupring_report());
    rep.append(sse_report(N));
    rep.append(generalized_report(opts.seed, opts.generalized_units));
    rep.append(property_report(opts.seed, opts.property_cases));
    return rep;
}

} // namespace nilk
