#include "helpers.hpp"

using namespace nilk;

TEST(Scalars, GaussianISquaredIsMinusOne) {
    auto i = GaussianInt::i();
    EXPECT_EQ(i * i, GaussianInt(-1));
    EXPECT_EQ((GaussianInt(3, 2) * GaussianInt(1, -1)), GaussianInt(5, -1));
}

TEST(Scalars, GaussianUnitsAreFourthRootsOfUnity) {
    using T = coeff_traits<GaussianInt>;
    for (auto u : {GaussianInt(1), GaussianInt(-1), GaussianInt(0, 1), GaussianInt(0, -1)}) {
        auto inv = T::try_invert(u);
        ASSERT_TRUE(inv);
        EXPECT_EQ(u * *inv, GaussianInt(1));
    }
    EXPECT_FALSE(T::try_invert(GaussianInt(1, 1)));
    EXPECT_FALSE(T::try_invert(GaussianInt(2)));
}

TEST(Scalars, SigmaHasOrderFour) {
    auto s = GroupRingZ4::sigma();
    EXPECT_EQ(s * s * s * s, GroupRingZ4(1));
    EXPECT_NE(s * s, GroupRingZ4(1));
}

TEST(Scalars, OneMinusSigmaSqKillsOnePlusSigmaSq) {
    auto s2 = GroupRingZ4::sigma() * GroupRingZ4::sigma();
    EXPECT_EQ((GroupRingZ4(1) - s2) * (GroupRingZ4(1) + s2), GroupRingZ4());
}

TEST(Scalars, GroupRingUnitsAreSignedGroupElements) {
    using T = coeff_traits<GroupRingZ4>;
    auto s = GroupRingZ4::sigma();
    GroupRingZ4 g(1);
    for (int k = 0; k < 4; ++k, g = g * s) {
        for (auto u : {g, -g}) {
            auto inv = T::try_invert(u);
            ASSERT_TRUE(inv) << k;
            EXPECT_EQ(u * *inv, GroupRingZ4(1));
        }
    }
    EXPECT_FALSE(T::try_invert(GroupRingZ4(1, 1)));
    EXPECT_FALSE(T::try_invert(GroupRingZ4(2)));
}

TEST(Scalars, DualNumbers) {
    auto e = DualF2::eps();
    EXPECT_EQ(e * e, DualF2());
    DualF2 u(true, true); // 1 + e
    EXPECT_EQ(u * u, DualF2(true));
    EXPECT_EQ(coeff_traits<DualF2>::try_invert(u), u);
    EXPECT_FALSE(coeff_traits<DualF2>::try_invert(e));
    EXPECT_EQ(coeff_traits<DualF2>::reduced(u), DualF2(true));
}

TEST(Scalars, F2CharacteristicTwo) {
    EXPECT_EQ(F2(true) + F2(true), F2(false));
    EXPECT_EQ(coeff_traits<F2>::from_int(3), F2(true));
    EXPECT_EQ(coeff_traits<F2>::from_int(-2), F2(false));
}

TEST(Scalars, RationalJsonRoundTrip) {
    using T = coeff_traits<Rational>;
    Rational r(-7, 3);
    EXPECT_EQ(T::to_json(r), json("-7/3"));
    EXPECT_EQ(T::from_json(T::to_json(r)), r);
    EXPECT_EQ(T::from_json(json(5)), Rational(5));
    EXPECT_EQ(T::from_json(json("4/6")), Rational(2, 3));
    EXPECT_THROW(T::from_json(json("1/0")), ParseError);
    EXPECT_THROW(T::from_json(json("abc")), ParseError);
}

TEST(Scalars, IntegerJsonKeepsBigValues) {
    using T = coeff_traits<Integer>;
    Integer big = Integer(1) << 200;
    EXPECT_EQ(T::from_json(T::to_json(big)), big);
    EXPECT_THROW(T::from_json(json("12x")), ParseError);
}

TEST(Scalars, CoefficientJsonRoundTrips) {
    GaussianInt g(-3, 8);
    EXPECT_EQ(coeff_traits<GaussianInt>::from_json(coeff_traits<GaussianInt>::to_json(g)), g);
    GroupRingZ4 z(1, -2, 3, -4);
    EXPECT_EQ(coeff_traits<GroupRingZ4>::from_json(coeff_traits<GroupRingZ4>::to_json(z)), z);
    DualF2 d(false, true);
    EXPECT_EQ(coeff_traits<DualF2>::from_json(coeff_traits<DualF2>::to_json(d)), d);
    EXPECT_THROW(coeff_traits<GroupRingZ4>::from_json(json::array({1, 2})), ParseError);
}

TEST(Scalars, SymbolsResolve) {
    EXPECT_EQ(coeff_traits<GaussianInt>::symbol("i"), GaussianInt::i());
    EXPECT_EQ(coeff_traits<GroupRingZ4>::symbol("sigma"), GroupRingZ4::sigma());
    EXPECT_EQ(coeff_traits<DualF2>::symbol("e"), DualF2::eps());
    EXPECT_FALSE(coeff_traits<Rational>::symbol("i"));
}
