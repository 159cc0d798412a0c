#include <set>

#include "helpers.hpp"

using namespace nilk;
using namespace nilk::test;

TEST(RingMaps, PsiSendsOneMinusSigmaSqToTwo) { EXPECT_EQ(psi(ZG("1-sigma^2")), G("2")); }

TEST(RingMaps, PsiSigmaIsI) { EXPECT_EQ(psi(ZG("sigma*x + sigma^3")), G("i*x - i")); }

TEST(RingMaps, RhoIIsOnePlusEps) {
    EXPECT_EQ(rho(G("i")), D("1+e"));
    EXPECT_EQ(rho(G("2+x")), D("x"));
    EXPECT_EQ(rho(G("-i*x")), D("(1+e)*x"));
}

TEST(RingMaps, PiT2Truncates) {
    auto r = pi_t2(Q("1+s*t+s^2*t^2+s^3*t^3"));
    EXPECT_EQ(r, Q("1+s*t", rings::ts_mod_t2()));
    EXPECT_EQ(r.descriptor(), "QQ[t,s]/(t^2)");
}

TEST(RingMaps, CanonicalLiftSectionOfPsi) {
    for (auto text : {"3-2i", "i*x+x^2", "0", "(1-i)*x^3-7"})
        EXPECT_EQ(psi(canonical_lift(G(text))), G(text)) << text;
}

TEST(RingMaps, IdealMembershipExamples) {
    EXPECT_TRUE(ideal_member(Q("s^3*t^3-s^2*t^2"), IdealSpec::MonomialT2));
    EXPECT_FALSE(ideal_member(Q("s*t"), IdealSpec::MonomialT2));
    EXPECT_TRUE(ideal_member(Q("0"), IdealSpec::MonomialT2));
    EXPECT_TRUE(ideal_member(ZG("(sigma^2-1)*(1+x)"), IdealSpec::PrincipalOneMinusSigmaSq));
    EXPECT_FALSE(ideal_member(ZG("1+x"), IdealSpec::PrincipalOneMinusSigmaSq));
    EXPECT_TRUE(ideal_member(G("2+4i*x"), IdealSpec::PrincipalTwo));
    EXPECT_FALSE(ideal_member(G("2+i*x"), IdealSpec::PrincipalTwo));
    EXPECT_THROW(ideal_member(Q("t"), IdealSpec::PrincipalTwo), RingMismatch);
}

// (1 - sigma^2) h has coefficients (h0-h2, h1-h3, h2-h0, h3-h1); enumerate
// small h and compare with the closed-form test.
TEST(RingMaps, OneMinusSigmaSqMembershipAgainstEnumeration) {
    std::set<std::array<int, 4>> image;
    for (int h0 = -3; h0 <= 3; ++h0)
        for (int h1 = -3; h1 <= 3; ++h1)
            for (int h2 = -3; h2 <= 3; ++h2)
                for (int h3 = -3; h3 <= 3; ++h3) {
                    auto g = (GroupRingZ4(1) - GroupRingZ4(0, 0, 1)) * GroupRingZ4(h0, h1, h2, h3);
                    image.insert({int(g.c[0]), int(g.c[1]), int(g.c[2]), int(g.c[3])});
                }
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    bool enumerated = image.count({a, b, c, d}) > 0;
                    EXPECT_EQ(in_one_minus_sigma_sq(GroupRingZ4(a, b, c, d)), enumerated)
                        << a << " " << b << " " << c << " " << d;
                }
}

TEST(RingMaps, SubringOfT2T3) {
    EXPECT_TRUE(in_t2_t3_subring(Q("s^2*t^2-s^3*t^3")));
    EXPECT_FALSE(in_t2_t3_subring(Q("s*t")));
    EXPECT_TRUE(in_t2_t3_subring(Q("1")));
    EXPECT_TRUE(in_t2_t3_subring(QZ("z^-1*t^5+s")));
}

TEST(RingMaps, Halve) {
    EXPECT_EQ(halve(G("2+4i*x")), G("1+2i*x"));
    EXPECT_THROW(halve(G("1+2x")), std::domain_error);
}

TEST(RingMaps, KahlerDifferential) {
    EXPECT_TRUE(kahler_d(F("1"), F("x")).coefficient.is_one());
    EXPECT_TRUE(kahler_d(F("x"), F("x^2")).is_zero());
    EXPECT_TRUE(kahler_d(F("0"), F("x^3+x")).is_zero());
    EXPECT_EQ(kahler_d(F("x"), F("x^3")).coefficient, F("x^3"));
}

TEST(RingMaps, DennisSteinDifferential) {
    // a = e*a1, b = b0 (+ e*b1): D<a,b> = a1 db0
    EXPECT_TRUE(dennis_stein_d(D("e"), D("x+e"), rings::x()).coefficient.is_one());
    EXPECT_EQ(dennis_stein_d(D("e*x"), D("x^3"), rings::x()).coefficient, F("x^3"));
    EXPECT_TRUE(dennis_stein_d(D("e"), D("x^2"), rings::x()).is_zero());
}
