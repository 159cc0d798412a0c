#include "helpers.hpp"

using namespace nilk;
using namespace nilk::test;

TEST(Steinberg, SingleLetterEvaluates) {
    auto w = StWord<Rational>::generator(1, 2, Q("s"));
    EXPECT_EQ(w.eval(2), M<Rational>(rings::ts(), {{"1", "s"}, {"0", "1"}}));
    EXPECT_EQ(w.max_index(), 2u);
}

TEST(Steinberg, InverseOfSingleLetter) {
    auto w = StWord<Rational>::generator(1, 2, Q("s"));
    auto inv = w.inverse();
    ASSERT_EQ(inv.size(), 1u);
    EXPECT_TRUE(inv.letters()[0].inverted);
    EXPECT_EQ(inv.eval(2), Matrix<Rational>::elementary(rings::ts(), 2, 1, 2, Q("-s")));
    EXPECT_EQ(word_inverse(inv), w);
}

TEST(Steinberg, InverseOfEmptyWord) {
    StWord<Rational> w(rings::ts());
    EXPECT_TRUE(w.inverse().empty());
    EXPECT_TRUE(w.eval(3).is_identity());
}

TEST(Steinberg, InverseOfHExpansionReversesLetters) {
    auto h = expand_h(1, 2, D("1-e*x"));
    auto inv = h.inverse();
    ASSERT_EQ(h.size(), 6u);
    ASSERT_EQ(inv.size(), 6u);
    for (std::size_t k = 0; k < 6; ++k) {
        const auto &a = h.letters()[k];
        const auto &b = inv.letters()[5 - k];
        EXPECT_EQ(a.i, b.i);
        EXPECT_EQ(a.j, b.j);
        EXPECT_EQ(a.param, b.param);
        EXPECT_NE(a.inverted, b.inverted);
    }
    EXPECT_TRUE((h * inv).eval(2).is_identity());
}

TEST(Steinberg, HEvaluatesToDiagonal) {
    const auto &r = rings::tsz();
    auto h = expand_h(1, 2, QZ("z"));
    EXPECT_EQ(h.eval(2), Matrix<Rational>::diagonal(r, {QZ("z"), QZ("z^-1")}));
    auto h3 = expand_h(3, 1, QZ("-2*z^2"));
    EXPECT_EQ(h3.eval(3), Matrix<Rational>::diagonal(r, {QZ("-1/2*z^-2"), QZ("1"), QZ("-2*z^2")}));
}

TEST(Steinberg, HNeedsUnit) { EXPECT_THROW(expand_h(1, 2, Q("t")), NotAUnit); }

TEST(Steinberg, DennisSteinWordVerbatim) {
    auto w = dennis_stein_word(1, 2, D("e"), D("x+e"));
    ASSERT_EQ(w.size(), 10u);
    // 1 - ab = 1 - e x, inverse 1 + e x
    EXPECT_EQ(w.letters()[0].i, 2u);
    EXPECT_EQ(w.letters()[0].param, D("-(x+e)*(1+e*x)"));
    EXPECT_EQ(w.letters()[1].param, D("-e"));
    EXPECT_EQ(w.letters()[2].param, D("x+e"));
    EXPECT_EQ(w.letters()[3].param, D("(1+e*x)*e"));
    auto h_inv = expand_h(1, 2, D("1-e*x")).inverse();
    for (std::size_t k = 0; k < 6; ++k)
        EXPECT_EQ(w.letters()[4 + k], h_inv.letters()[k]);
    EXPECT_TRUE(w.eval(2).is_identity());
}

TEST(Steinberg, DennisSteinWithZero) {
    EXPECT_TRUE(dennis_stein_word(1, 2, Q("0"), Q("t+s")).eval(2).is_identity());
    EXPECT_TRUE(dennis_stein_word(2, 1, Q("3"), Q("1/5")).eval(2).is_identity());
    EXPECT_THROW(dennis_stein_word(1, 2, Q("1"), Q("1")), NotAUnit);
}

// Over the field of fractions every <a, b> with ab != 1 is in K_2; sample
// rational constants and check the image in GL_3 for all index pairs.
TEST(Steinberg, DennisSteinOverRationalConstants) {
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            if (a * b == 2) // 1 - a(b/2) must be a unit
                continue;
            for (std::size_t i = 1; i <= 3; ++i)
                for (std::size_t j = 1; j <= 3; ++j) {
                    if (i == j)
                        continue;
                    auto w = dennis_stein_word(i, j, Q(std::to_string(a)), Q(std::to_string(b)) * Q("1/2"));
                    EXPECT_TRUE(w.eval(3).is_identity()) << a << " " << b;
                }
        }
}

TEST(Steinberg, ReducedXWord) {
    auto X = groupring::reduced_x_word();
    EXPECT_EQ(X.letters()[0].param, D("-x-e-e*x^2"));
    EXPECT_EQ(X.letters()[0].param, D("x+e+e*x^2")); // same element in characteristic 2
    EXPECT_TRUE(X.eval(2).is_identity());
}

TEST(Steinberg, AppendixWords) {
    auto Y = groupring::word_y(), Z = groupring::word_z();
    EXPECT_EQ(Y.size(), 4u);
    EXPECT_EQ(Z.size(), 6u);
    EXPECT_EQ(Y.letters()[1].i, 1u);
    EXPECT_EQ(Y.letters()[1].param, G("1-i"));
    EXPECT_EQ(Z.letters()[4].i, 2u);
    EXPECT_EQ(Z.letters()[4].param, G("1+(i-1)*x"));
    EXPECT_EQ(Matrix<GaussianInt>::elementary(rings::x(), 2, 2, 1, G("x+i-1")), StWord<GaussianInt>(rings::x(), {Y.letters()[2]}).eval(2));
}

TEST(Steinberg, EvalOfConcatenation) {
    auto Y = groupring::word_y(), Z = groupring::word_z();
    EXPECT_EQ((Y * Z).eval(2), Y.eval(2) * Z.eval(2));
    EXPECT_TRUE((Y * word_inverse(Y)).eval(2).is_identity());
}

TEST(Steinberg, LetterValidation) {
    StWord<Rational> w(rings::ts());
    EXPECT_THROW(w.push({1, 1, Q("s"), false}), std::invalid_argument);
    EXPECT_THROW(w.push({0, 1, Q("s"), false}), std::invalid_argument);
    EXPECT_THROW(w.push({1, 2, QZ("s"), false}), RingMismatch);
    w.push({1, 3, Q("s"), false});
    EXPECT_THROW(w.eval(2), DimensionMismatch);
}
