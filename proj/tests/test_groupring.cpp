#include "helpers.hpp"

using namespace nilk;
using namespace nilk::test;
using namespace nilk::groupring;

namespace {

constexpr std::size_t kCases = 1000;

// A product of elementary matrices with parameters in (2): det 1 and congruent to I.
GMatrix random_relative(RandomSource &rng) {
    const auto &r = rings::x();
    GMatrix m = GMatrix::identity(r, 2);
    const int len = rng.uniform(1, 3);
    for (int k = 0; k < len; ++k) {
        auto p = random_poly<GaussianInt>(rng, r, 2, 2) * G("2");
        m = m * (rng.coin() ? GMatrix::elementary(r, 2, 1, 2, p) : GMatrix::elementary(r, 2, 2, 1, p));
    }
    return m;
}

} // namespace

TEST(GroupRing, YZIsRelative) {
    auto yz = yz_matrix().matrix();
    EXPECT_TRUE(yz.det().is_one());
    auto diff = yz - GMatrix::identity(rings::x(), 2);
    EXPECT_TRUE(ideal_member(diff, IdealSpec::PrincipalTwo));
    EXPECT_TRUE(reduce_to_dual(diff).is_zero());
}

TEST(GroupRing, RelativeRepValidation) {
    const auto &r = rings::x();
    EXPECT_THROW(RelativeRep(GMatrix::elementary(r, 2, 1, 2, G("x"))), VerificationFailure);
    EXPECT_THROW(RelativeRep(GMatrix::diagonal(r, {G("-1"), G("1")})), VerificationFailure);
    EXPECT_THROW(RelativeRep(GMatrix::zero(r, 2, 3)), DimensionMismatch);
}

TEST(GroupRing, ReduceToDual) {
    const auto &r = rings::x();
    EXPECT_TRUE(reduce_to_dual(yz_matrix()).is_identity());
    EXPECT_TRUE(reduce_to_dual(GMatrix::identity(r, 2)).is_identity());
    auto m = GMatrix::identity(r, 2);
    m(0, 0) = m(0, 0) + G("2");
    EXPECT_TRUE(reduce_to_dual(m).is_identity());
}

TEST(GroupRing, LiftMatchesDisplay) {
    auto lift = lift_to_group_ring(yz_matrix());
    auto shown = published_group_ring_matrix();
    EXPECT_EQ(lift, shown);
    EXPECT_EQ(lift(0, 0), ZG("1-(1-sigma^2)*(x-2x^2+2x^3-sigma+x*sigma+x^2*sigma)"));
    EXPECT_TRUE(lift.det().is_one());
    EXPECT_TRUE(has_relative_shape(lift));
}

TEST(GroupRing, PsiOfDisplayIsYZ) {
    auto shown = published_group_ring_matrix();
    EXPECT_EQ(shown.map([](const ZGPoly &e) { return psi(e); }), yz_matrix().matrix());
}

TEST(GroupRing, LiftOfIdentity) {
    const auto &r = rings::x();
    EXPECT_TRUE(lift_to_group_ring(RelativeRep(GMatrix::identity(r, 2))).is_identity());
}

TEST(GroupRing, SpecializationAtZero) {
    auto at0 = at_x_zero(published_group_ring_matrix());
    EXPECT_EQ(at0(0, 0), ZG("1+(1-sigma^2)*sigma"));
    EXPECT_TRUE(at0.det().is_one());
}

TEST(GroupRing, SymbolDifferential) {
    EXPECT_TRUE(symbol_differential().coefficient.is_one());
    EXPECT_TRUE(symbol_e_x_plus_e().eval(2).is_identity());
}

TEST(GroupRingProperty, LiftMapsBackUnderPsi) {
    RandomSource rng(11);
    for (std::size_t k = 0; k < kCases; ++k) {
        auto m = random_relative(rng);
        auto lift = lift_to_group_ring(RelativeRep(m));
        ASSERT_EQ(lift.map([](const ZGPoly &e) { return psi(e); }), m) << m.to_string();
        ASSERT_TRUE(lift.det().is_one());
        ASSERT_TRUE(has_relative_shape(lift)) << lift.to_string();
    }
}

TEST(GroupRingProperty, CanonicalLiftChoiceIsIrrelevant) {
    RandomSource rng(12);
    const auto &r = rings::x();
    auto a = ZG("1-sigma^2"), b = ZG("1+sigma^2");
    for (std::size_t k = 0; k < kCases; ++k) {
        auto g = random_poly<GaussianInt>(rng, r);
        auto h = random_poly<GroupRingZ4>(rng, r);
        ASSERT_EQ(a * (canonical_lift(g) + b * h), a * canonical_lift(g));
        ASSERT_EQ(psi(canonical_lift(g) + b * h - canonical_lift(g)), psi(b * h));
    }
}

TEST(GroupRingProperty, ReductionKillsTwo) {
    RandomSource rng(13);
    const auto &r = rings::x();
    for (std::size_t k = 0; k < kCases; ++k) {
        auto m = GMatrix::identity(r, 2) + random_matrix<GaussianInt>(rng, r, 2, 2).scaled(G("2"));
        ASSERT_TRUE(reduce_to_dual(m).is_identity());
    }
}
