#include "helpers.hpp"

using namespace nilk;
using namespace nilk::test;

TEST(Parse, Juxtaposition) {
    EXPECT_EQ(ZG("2x^2*sigma"), ZG("2*x^2*sigma"));
    EXPECT_EQ(G("(i-1)x"), G("i*x-x"));
    EXPECT_EQ(G("3i"), G("i+i+i"));
}

TEST(Parse, PrecedenceAndSigns) {
    EXPECT_EQ(Q("-t^2"), Q("-(t^2)"));
    EXPECT_EQ(Q("2-3*s+1"), Q("3-3*s"));
    EXPECT_EQ(Q("-(1+s)*(1-s)"), Q("s^2-1"));
    EXPECT_EQ(Q("--s"), Q("s"));
    EXPECT_EQ(QZ("z^-1*z^-1"), QZ("z^-2"));
}

TEST(Parse, Division) {
    EXPECT_EQ(Q("s/2"), Q("1/2*s"));
    EXPECT_EQ(QZ("t/z"), QZ("t*z^-1"));
    // reported as a parse error with the offset, not as a bare NotAUnit
    EXPECT_THROW(Q("1/t"), ParseError);
    EXPECT_THROW(Q("1/0"), ParseError);
}

TEST(Parse, Errors) {
    EXPECT_THROW(Q("1+"), ParseError);
    EXPECT_THROW(Q("(1+s"), ParseError);
    EXPECT_THROW(Q("y"), ParseError);
    EXPECT_THROW(Q("s^"), ParseError);
    EXPECT_THROW(Q("s)"), ParseError);
    EXPECT_THROW(Q(""), ParseError);
    EXPECT_THROW(G("sigma"), ParseError);
}

TEST(Parse, SymbolsAreCoefficients) {
    auto p = G("i*x");
    ASSERT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p.terms().begin()->second, GaussianInt::i());
    EXPECT_TRUE(D("e*e").is_zero());
    EXPECT_TRUE(ZG("sigma^4").is_one());
}
