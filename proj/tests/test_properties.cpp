#include "helpers.hpp"

using namespace nilk;
using namespace nilk::test;

namespace {

constexpr std::size_t kCases = 1000;

template <Coefficient C>
Matrix<C> random_elementary_product(RandomSource &rng, const RingPtr &r, std::size_t n, int len = 3) {
    auto m = Matrix<C>::identity(r, n);
    for (int k = 0; k < len; ++k) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n))), j = i;
        while (j == i)
            j = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n)));
        m = m * Matrix<C>::elementary(r, n, i, j, random_poly<C>(rng, r, 2, 1));
    }
    return m;
}

/// Strictly upper triangular, conjugated by an elementary product.
Matrix<Rational> random_nilpotent(RandomSource &rng, std::size_t n) {
    const auto &r = rings::ts();
    Matrix<Rational> u(r, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            u(i, j) = random_poly<Rational>(rng, r, 2, 1);
    if (n < 2) // no elementary matrices to conjugate by
        return u;
    auto g = random_elementary_product<Rational>(rng, r, n, 2);
    return g * u * *g.inverse_small();
}

} // namespace

TEST(Properties, LibrarySuites) {
    auto outcomes = run_property_suites(2026, kCases);
    EXPECT_GE(outcomes.size(), 20u);
    for (const auto &o : outcomes) {
        EXPECT_GE(o.cases, kCases) << o.name;
        EXPECT_TRUE(o.ok()) << o.name << ": " << o.first_failure;
    }
}

TEST(Properties, InverseIsExact) {
    RandomSource rng(1);
    const auto &t2 = rings::ts_mod_t2();
    const auto &x = rings::x();
    const auto &tsz = rings::tsz();
    std::size_t units = 0;
    for (std::size_t k = 0; k < kCases; ++k) {
        auto a = D("1") + D("e") * random_poly<DualF2>(rng, x);
        auto b = Q("1", t2).scaled(Rational(rng.uniform(1, 5), rng.uniform(1, 3))) + Q("t", t2) * random_poly<Rational>(rng, t2);
        auto c = Poly<Rational>::monomial(tsz, {0, 0, rng.uniform(-4, 4)}, Rational(rng.uniform(1, 9), 7));
        // half the time a trivial unit +-sigma^k, otherwise a random element
        auto d = random_poly<GroupRingZ4>(rng, x);
        if (rng.coin()) {
            GroupRingZ4 g;
            g.c[static_cast<std::size_t>(rng.uniform(0, 3))] = rng.coin() ? 1 : -1;
            d = Poly<GroupRingZ4>::constant(x, g);
        }
        for (auto *p : {&a}) {
            auto inv = p->try_invert();
            ASSERT_TRUE(inv) << p->to_string();
            ASSERT_TRUE((*p * *inv).is_one());
        }
        auto ib = b.try_invert();
        ASSERT_TRUE(ib) << b.to_string();
        ASSERT_TRUE((b * *ib).is_one());
        auto ic = c.try_invert();
        ASSERT_TRUE(ic);
        ASSERT_TRUE((c * *ic).is_one());
        if (auto id = d.try_invert()) {
            ++units;
            ASSERT_TRUE((d * *id).is_one());
        }
    }
    EXPECT_GT(units, 0u);
}

TEST(Properties, CanonicalLiftIsSectionOfPsi) {
    RandomSource rng(2);
    for (std::size_t k = 0; k < kCases; ++k) {
        auto g = random_poly<GaussianInt>(rng, rings::x(), 4, 4);
        ASSERT_EQ(psi(canonical_lift(g)), g);
    }
}

TEST(Properties, CanonicalFormSerializes) {
    RandomSource rng(3);
    for (std::size_t k = 0; k < kCases; ++k) {
        auto a = random_poly<Rational>(rng, rings::tsz());
        auto b = random_poly<Rational>(rng, rings::tsz());
        ASSERT_EQ(a == b, to_json(a).dump() == to_json(b).dump());
        auto rebuilt = poly_from_json<Rational>(to_json(a + b - b));
        ASSERT_EQ(to_json(rebuilt).dump(), to_json(a).dump());
    }
}

TEST(Properties, MatrixAlgebra) {
    RandomSource rng(4);
    const auto &r = rings::ts();
    using QM = Matrix<Rational>;
    for (std::size_t k = 0; k < kCases; ++k) {
        auto A = random_matrix<Rational>(rng, r, 2, 3), B = random_matrix<Rational>(rng, r, 3, 2),
             C = random_matrix<Rational>(rng, r, 2, 2);
        ASSERT_EQ((A * B) * C, A * (B * C));
        ASSERT_EQ((A * B).transpose(), B.transpose() * A.transpose());
        auto a = random_poly<Rational>(rng, r);
        ASSERT_TRUE((QM::elementary(r, 3, 2, 3, a) * QM::elementary(r, 3, 2, 3, -a)).is_identity());
        auto G = random_elementary_product<Rational>(rng, r, 2);
        auto inv = G.inverse_small();
        ASSERT_TRUE(inv);
        ASSERT_TRUE((*inv * G).is_identity());
        if (auto ci = C.inverse_small()) {
            ASSERT_TRUE((*ci * C).is_identity()) << C.to_string();
        }
    }
}

TEST(Properties, LoopOfIdempotentIsInvertible) {
    RandomSource rng(5);
    const auto &r = rings::ts();
    const auto &rz = rings::tsz();
    for (std::size_t k = 0; k < kCases; ++k) {
        auto G = random_elementary_product<Rational>(rng, r, 2);
        auto e = G * laurent::projector_p(r) * *G.inverse_small();
        ASSERT_TRUE(e.is_idempotent());
        auto ez = e.map([&](const Poly<Rational> &p) { return embed(p, rz); });
        auto back = Matrix<Rational>::identity(rz, 2) + ez.scaled(QZ("z^-1") - QZ("1"));
        ASSERT_TRUE((laurent::loop_z(e) * back).is_identity());
        ASSERT_EQ(laurent::loop_z(e).det(), QZ("z"));
    }
}

TEST(Properties, WordsHaveDeterminantOne) {
    RandomSource rng(6);
    for (std::size_t k = 0; k < kCases; ++k) {
        auto w = random_word<GaussianInt>(rng, rings::x(), 3);
        ASSERT_TRUE(w.eval(3).det().is_one()) << w.to_string();
    }
}

TEST(Properties, HEvaluatesToDiagonal) {
    RandomSource rng(7);
    const auto &x = rings::x();
    for (std::size_t k = 0; k < kCases; ++k) {
        auto a = D("1") + D("e") * random_poly<DualF2>(rng, x);
        std::size_t n = 3, i = static_cast<std::size_t>(rng.uniform(1, 3)), j = i;
        while (j == i)
            j = static_cast<std::size_t>(rng.uniform(1, 3));
        auto expected = Matrix<DualF2>::identity(x, n);
        expected(i - 1, i - 1) = a;
        expected(j - 1, j - 1) = *a.try_invert();
        ASSERT_EQ(expand_h(i, j, a).eval(n), expected) << a.to_string();
    }
}

TEST(Properties, NilpotentMaps) {
    RandomSource rng(8);
    for (std::size_t c = 0; c < kCases; ++c) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        auto N = random_nilpotent(rng, n);
        auto idx = N.nilpotency_index(static_cast<unsigned>(n));
        ASSERT_TRUE(idx) << N.to_string();
        ASSERT_TRUE(frobenius(N, *idx).is_zero());
        std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        auto V = verschiebung(N, k);
        auto vidx = V.nilpotency_index(static_cast<unsigned>(k * *idx));
        ASSERT_TRUE(vidx) << "k=" << k << " N=" << N.to_string();
    }
}

TEST(Properties, TrivialShiftEquivalences) {
    RandomSource rng(9);
    const auto &r = rings::ts();
    for (std::size_t c = 0; c < kCases; ++c) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3)), m = static_cast<std::size_t>(rng.uniform(1, 3));
        auto A = random_matrix<Rational>(rng, r, n, n);
        auto I = Matrix<Rational>::identity(r, n);
        ASSERT_TRUE(verify_esse(A, A, ESSEWitness<Rational>{A, I}));
        ASSERT_TRUE(verify_esse(A, A, ESSEWitness<Rational>{I, A}));
        auto U = random_matrix<Rational>(rng, r, n, m), V = random_matrix<Rational>(rng, r, m, n);
        ASSERT_TRUE(verify_se(U * V, V * U, SEWitness<Rational>{U, V, 1}));
    }
}

TEST(Properties, GeneralizedUnits) {
    auto rep = generalized_report(77, 50);
    ASSERT_EQ(rep.checks().size(), 1u);
    EXPECT_EQ(rep.checks()[0].status, CheckStatus::Pass) << rep.checks()[0].computed;
}
