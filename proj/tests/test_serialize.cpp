#include "helpers.hpp"

using namespace nilk;
using namespace nilk::test;

TEST(Serialize, RingDescriptorsRoundTrip) {
    for (const RingPtr &r : {rings::ts(), rings::ts_mod_t2(), rings::tsz(), rings::x()})
        EXPECT_TRUE(same_ring(parse_ring_suffix(r->suffix()), r)) << r->suffix();
    EXPECT_EQ(coefficient_name_of("F2[e]/(e^2)[x]"), "F2[e]/(e^2)");
    EXPECT_EQ(coefficient_name_of("F2[x]"), "F2");
    EXPECT_EQ(coefficient_name_of("ZZ[C4][x]"), "ZZ[C4]");
    EXPECT_EQ(coefficient_name_of("ZZ[x]"), "ZZ");
    EXPECT_THROW(coefficient_name_of("RR[x]"), ParseError);
    EXPECT_THROW(parse_ring_suffix("[t,z^-1"), ParseError);
    EXPECT_THROW(parse_ring_suffix("[t]/(s^2)"), ParseError);
    EXPECT_THROW(parse_ring_descriptor<Rational>("ZZ[x]"), RingMismatch);
}

TEST(Serialize, PolyRoundTrip) {
    auto p = QZ("1-(1-z^-1)*s^4*t^4");
    auto j = to_json(p);
    EXPECT_EQ(j.at("ring"), "QQ[t,s,z,z^-1]");
    EXPECT_EQ(poly_from_json<Rational>(j), p);
    EXPECT_EQ(j.at("terms")[0], json::array({json::array({0, 0, 0}), "1/1"}));
}

TEST(Serialize, MatrixRoundTripAllCoefficientRings) {
    auto q = matrix_from_text<Rational>(reference::kLaurentRepresentativeAsDisplayed, rings::tsz());
    EXPECT_EQ(matrix_from_json<Rational>(to_json(q)), q);
    auto g = groupring::published_group_ring_matrix();
    EXPECT_EQ(matrix_from_json<GroupRingZ4>(to_json(g)), g);
    auto y = groupring::word_y().eval(2);
    EXPECT_EQ(matrix_from_json<GaussianInt>(to_json(y)), y);
    auto d = M<DualF2>(rings::x(), {{"1+e*x", "e"}, {"x", "1"}});
    EXPECT_EQ(matrix_from_json<DualF2>(to_json(d)), d);
}

TEST(Serialize, MatrixAcceptsExpressionStrings) {
    json j = {{"ring", "QQ[t,s]"}, {"entries", json::array({json::array({"1+s*t", "0"}), json::array({"s^2*t^2", "1"})})}};
    auto m = matrix_from_json<Rational>(j);
    EXPECT_EQ(m, M<Rational>(rings::ts(), {{"1+s*t", "0"}, {"s^2*t^2", "1"}}));
}

TEST(Serialize, MalformedMatrices) {
    EXPECT_THROW(matrix_from_json<Rational>(json::parse(R"({"ring": "QQ[t,s]", "entries": []})")), ParseError);
    EXPECT_THROW(matrix_from_json<Rational>(json::parse(R"({"ring": "QQ[t,s]", "entries": [["1"], ["1", "2"]]})")),
                 DimensionMismatch);
    EXPECT_THROW(
        matrix_from_json<Rational>(json::parse(R"({"ring": "QQ[t,s]", "rows": 2, "entries": [["1"]]})")),
        ParseError);
    EXPECT_THROW(matrix_from_json<Rational>(json::parse(R"({"ring": "QQ[t,s]", "entries": [[[[[1], "1"]]]]})")),
                 ParseError);
    EXPECT_THROW(matrix_from_json<Rational>(json::parse(R"({"ring": "QQ[t,s]", "entries": [["y"]]})")), ParseError);
    EXPECT_THROW(matrix_from_json<Rational>(json::parse(R"({"entries": [["1"]]})")), json::exception);
}

TEST(Serialize, TermsAreCanonicalized) {
    json terms = json::array({json::array({json::array({1, 0}), "1/2"}), json::array({json::array({1, 0}), "1/2"}),
                              json::array({json::array({0, 2}), "0"})});
    EXPECT_EQ(terms_from_json<Rational>(terms, rings::ts()), Q("t"));
}

TEST(Serialize, WordRoundTrip) {
    auto w = groupring::reduced_x_word();
    EXPECT_EQ(word_from_json<DualF2>(to_json(w), rings::x()), w);
}

TEST(Serialize, LatexLayout) {
    auto m = M<Rational>(rings::tsz(), {{"1-(1-z^-1)*s^4*t^4", "0"}, {"1/2*t^2", "1"}});
    auto tex = to_latex(m);
    EXPECT_EQ(tex.rfind("\\begin{pmatrix}\n", 0), 0u);
    EXPECT_NE(tex.find(" & 0 \\\\\n"), std::string::npos);
    EXPECT_NE(tex.find("\\frac{1}{2}"), std::string::npos);
    EXPECT_NE(tex.find("z^{-1}"), std::string::npos);
    EXPECT_NE(tex.find("\\end{pmatrix}\n"), std::string::npos);
}
