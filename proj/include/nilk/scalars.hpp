#pragma once

// Coefficient rings: ZZ, QQ, ZZ[i], ZZ[C4], F2 and the dual numbers F2[e]/(e^2).
//
// Every coefficient type is a plain value type with the usual operators.
// The polynomial layer talks to it only through coeff_traits<C>.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "nilk/errors.hpp"

namespace nilk {

using json = nlohmann::json;

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline Integer parse_integer(std::string_view text) {
    if (text.empty())
        throw ParseError("empty integer literal");
    std::size_t pos = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (pos == text.size())
        throw ParseError("bad integer literal '" + std::string(text) + "'");
    for (std::size_t k = pos; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            throw ParseError("bad integer literal '" + std::string(text) + "'");
    Integer v(std::string(text.substr(pos)));
    return text[0] == '-' ? Integer(-v) : v;
}

inline Integer integer_from_json(const json &j) {
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    throw ParseError("expected integer, got " + j.dump());
}

inline json integer_to_json(const Integer &v) { return v.str(); }

inline bool is_even(const Integer &v) { return (v & 1) == 0; }

// Render "a*sym" pieces joined with signs, e.g. {3, -1} x {"", "i"} -> "3-i".
template <std::size_t N>
std::string join_signed(const std::array<Integer, N> &coeffs, const std::array<std::string, N> &syms) {
    std::string out;
    for (std::size_t k = 0; k < N; ++k) {
        const Integer &c = coeffs[k];
        if (c == 0)
            continue;
        std::string piece;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (syms[k].empty())
            piece = mag.str();
        else if (mag == 1)
            piece = syms[k];
        else
            piece = mag.str() + "*" + syms[k];
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += piece;
    }
    return out.empty() ? "0" : out;
}

inline Integer mod2(const Integer &v) {
    Integer r = v % 2;
    return r < 0 ? Integer(-r) : r;
}

} // namespace detail

/// a + b*i with i^2 = -1.
struct GaussianInt {
    Integer re = 0;
    Integer im = 0;

    GaussianInt() = default;
    GaussianInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}
    static GaussianInt i() { return {0, 1}; }

    friend GaussianInt operator+(const GaussianInt &a, const GaussianInt &b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussianInt operator-(const GaussianInt &a, const GaussianInt &b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussianInt operator-(const GaussianInt &a) { return {-a.re, -a.im}; }
    friend GaussianInt operator*(const GaussianInt &a, const GaussianInt &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt &, const GaussianInt &) = default;
};

/// c0 + c1*s + c2*s^2 + c3*s^3 in the integral group ring of the cyclic group of order 4 (s^4 = 1).
struct GroupRingZ4 {
    std::array<Integer, 4> c{0, 0, 0, 0};

    GroupRingZ4() = default;
    GroupRingZ4(Integer c0, Integer c1 = 0, Integer c2 = 0, Integer c3 = 0)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    static GroupRingZ4 sigma() { return {0, 1, 0, 0}; }

    friend GroupRingZ4 operator+(const GroupRingZ4 &a, const GroupRingZ4 &b) {
        GroupRingZ4 r;
        for (int k = 0; k < 4; ++k)
            r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend GroupRingZ4 operator-(const GroupRingZ4 &a, const GroupRingZ4 &b) {
        GroupRingZ4 r;
        for (int k = 0; k < 4; ++k)
            r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    friend GroupRingZ4 operator-(const GroupRingZ4 &a) {
        GroupRingZ4 r;
        for (int k = 0; k < 4; ++k)
            r.c[k] = -a.c[k];
        return r;
    }
    // cyclic convolution of length 4
    friend GroupRingZ4 operator*(const GroupRingZ4 &a, const GroupRingZ4 &b) {
        GroupRingZ4 r;
        for (int p = 0; p < 4; ++p) {
            if (a.c[p] == 0)
                continue;
            for (int q = 0; q < 4; ++q)
                r.c[(p + q) % 4] += a.c[p] * b.c[q];
        }
        return r;
    }
    friend bool operator==(const GroupRingZ4 &, const GroupRingZ4 &) = default;
};

/// The two-element field.
struct F2 {
    bool v = false;

    F2() = default;
    F2(bool b) : v(b) {}

    friend F2 operator+(F2 a, F2 b) { return F2(a.v != b.v); }
    friend F2 operator-(F2 a, F2 b) { return a + b; }
    friend F2 operator-(F2 a) { return a; }
    friend F2 operator*(F2 a, F2 b) { return F2(a.v && b.v); }
    friend bool operator==(F2, F2) = default;
};

/// a + b*e over F2 with e^2 = 0.
struct DualF2 {
    bool a = false;
    bool b = false;

    DualF2() = default;
    DualF2(bool a_, bool b_ = false) : a(a_), b(b_) {}
    static DualF2 eps() { return {false, true}; }

    friend DualF2 operator+(DualF2 x, DualF2 y) { return {x.a != y.a, x.b != y.b}; }
    friend DualF2 operator-(DualF2 x, DualF2 y) { return x + y; }
    friend DualF2 operator-(DualF2 x) { return x; }
    friend DualF2 operator*(DualF2 x, DualF2 y) { return {x.a && y.a, (x.a && y.b) != (x.b && y.a)}; }
    friend bool operator==(DualF2, DualF2) = default;
};

/// Uniform interface the polynomial and matrix layers use for coefficients.
///   name        ring descriptor prefix used in serialization
///   reduced     image modulo the nilradical (identity on domains)
///   symbol      parser hook for ring-specific atoms (i, sigma, e)
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Integer> {
    static constexpr std::string_view name = "ZZ";
    static Integer zero() { return 0; }
    static Integer one() { return 1; }
    static Integer from_int(long long v) { return Integer(v); }
    static bool is_zero(const Integer &v) { return v == 0; }
    static std::optional<Integer> try_invert(const Integer &v) {
        if (v == 1 || v == -1)
            return v;
        return std::nullopt;
    }
    static Integer reduced(const Integer &v) { return v; }
    static std::optional<Integer> symbol(std::string_view) { return std::nullopt; }
    static std::string to_string(const Integer &v) { return v.str(); }
    static std::string to_latex(const Integer &v) { return v.str(); }
    static json to_json(const Integer &v) { return detail::integer_to_json(v); }
    static Integer from_json(const json &j) { return detail::integer_from_json(j); }
};

template <>
struct coeff_traits<Rational> {
    static constexpr std::string_view name = "QQ";
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static Rational from_int(long long v) { return Rational(v); }
    static bool is_zero(const Rational &v) { return v == 0; }
    static std::optional<Rational> try_invert(const Rational &v) {
        if (v == 0)
            return std::nullopt;
        return Rational(1) / v;
    }
    static Rational reduced(const Rational &v) { return v; }
    static std::optional<Rational> symbol(std::string_view) { return std::nullopt; }
    static std::string to_string(const Rational &v) {
        auto num = boost::multiprecision::numerator(v);
        auto den = boost::multiprecision::denominator(v);
        return den == 1 ? num.str() : num.str() + "/" + den.str();
    }
    static std::string to_latex(const Rational &v) {
        auto num = boost::multiprecision::numerator(v);
        auto den = boost::multiprecision::denominator(v);
        if (den == 1)
            return num.str();
        std::string sign = num < 0 ? "-" : "";
        Integer mag = num < 0 ? Integer(-num) : Integer(num);
        return sign + "\\frac{" + mag.str() + "}{" + den.str() + "}";
    }
    static json to_json(const Rational &v) {
        return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
    }
    static Rational from_json(const json &j) {
        if (j.is_number_integer())
            return Rational(j.get<std::int64_t>());
        if (!j.is_string())
            throw ParseError("expected rational \"p/q\", got " + j.dump());
        auto s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(detail::parse_integer(s));
        Integer num = detail::parse_integer(std::string_view(s).substr(0, slash));
        Integer den = detail::parse_integer(std::string_view(s).substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    }
};

template <>
struct coeff_traits<GaussianInt> {
    static constexpr std::string_view name = "ZZ[i]";
    static GaussianInt zero() { return {}; }
    static GaussianInt one() { return {1, 0}; }
    static GaussianInt from_int(long long v) { return {Integer(v), 0}; }
    static bool is_zero(const GaussianInt &v) { return v.re == 0 && v.im == 0; }
    // units are +-1, +-i
    static std::optional<GaussianInt> try_invert(const GaussianInt &v) {
        if (v.re * v.re + v.im * v.im != 1)
            return std::nullopt;
        return GaussianInt{v.re, -v.im};
    }
    static GaussianInt reduced(const GaussianInt &v) { return v; }
    static std::optional<GaussianInt> symbol(std::string_view s) {
        if (s == "i")
            return GaussianInt::i();
        return std::nullopt;
    }
    static std::string to_string(const GaussianInt &v) {
        return detail::join_signed<2>({v.re, v.im}, {"", "i"});
    }
    static std::string to_latex(const GaussianInt &v) {
        auto s = detail::join_signed<2>({v.re, v.im}, {"", "i"});
        std::erase(s, '*');
        return s;
    }
    static json to_json(const GaussianInt &v) {
        return json::array({detail::integer_to_json(v.re), detail::integer_to_json(v.im)});
    }
    static GaussianInt from_json(const json &j) {
        if (!j.is_array() || j.size() != 2)
            throw ParseError("expected [re, im], got " + j.dump());
        return {detail::integer_from_json(j[0]), detail::integer_from_json(j[1])};
    }
};

template <>
struct coeff_traits<GroupRingZ4> {
    static constexpr std::string_view name = "ZZ[C4]";
    static GroupRingZ4 zero() { return {}; }
    static GroupRingZ4 one() { return {1}; }
    static GroupRingZ4 from_int(long long v) { return {Integer(v)}; }
    static bool is_zero(const GroupRingZ4 &v) {
        return v.c[0] == 0 && v.c[1] == 0 && v.c[2] == 0 && v.c[3] == 0;
    }
    // The units of ZZ[C4] are exactly +-sigma^k.
    static std::optional<GroupRingZ4> try_invert(const GroupRingZ4 &v) {
        int where = -1;
        for (int k = 0; k < 4; ++k) {
            if (v.c[k] == 0)
                continue;
            if (where >= 0 || (v.c[k] != 1 && v.c[k] != -1))
                return std::nullopt;
            where = k;
        }
        if (where < 0)
            return std::nullopt;
        GroupRingZ4 inv;
        inv.c[(4 - where) % 4] = v.c[where];
        return inv;
    }
    static GroupRingZ4 reduced(const GroupRingZ4 &v) { return v; }
    static std::optional<GroupRingZ4> symbol(std::string_view s) {
        if (s == "sigma")
            return GroupRingZ4::sigma();
        return std::nullopt;
    }
    static std::string to_string(const GroupRingZ4 &v) {
        return detail::join_signed<4>(v.c, {"", "sigma", "sigma^2", "sigma^3"});
    }
    static std::string to_latex(const GroupRingZ4 &v) {
        auto s = detail::join_signed<4>(v.c, {"", "\\sigma", "\\sigma^{2}", "\\sigma^{3}"});
        std::erase(s, '*');
        return s;
    }
    static json to_json(const GroupRingZ4 &v) {
        json out = json::array();
        for (const auto &x : v.c)
            out.push_back(detail::integer_to_json(x));
        return out;
    }
    static GroupRingZ4 from_json(const json &j) {
        if (!j.is_array() || j.size() != 4)
            throw ParseError("expected [c0, c1, c2, c3], got " + j.dump());
        return {detail::integer_from_json(j[0]), detail::integer_from_json(j[1]), detail::integer_from_json(j[2]),
                detail::integer_from_json(j[3])};
    }
};

template <>
struct coeff_traits<F2> {
    static constexpr std::string_view name = "F2";
    static F2 zero() { return {}; }
    static F2 one() { return F2(true); }
    static F2 from_int(long long v) { return F2(v % 2 != 0); }
    static bool is_zero(F2 v) { return !v.v; }
    static std::optional<F2> try_invert(F2 v) {
        if (!v.v)
            return std::nullopt;
        return v;
    }
    static F2 reduced(F2 v) { return v; }
    static std::optional<F2> symbol(std::string_view) { return std::nullopt; }
    static std::string to_string(F2 v) { return v.v ? "1" : "0"; }
    static std::string to_latex(F2 v) { return to_string(v); }
    static json to_json(F2 v) { return v.v ? 1 : 0; }
    static F2 from_json(const json &j) {
        if (!j.is_number_integer())
            throw ParseError("expected 0 or 1, got " + j.dump());
        return from_int(j.get<long long>());
    }
};

template <>
struct coeff_traits<DualF2> {
    static constexpr std::string_view name = "F2[e]/(e^2)";
    static DualF2 zero() { return {}; }
    static DualF2 one() { return {true, false}; }
    static DualF2 from_int(long long v) { return {v % 2 != 0, false}; }
    static bool is_zero(DualF2 v) { return !v.a && !v.b; }
    // (1 + b e)^2 = 1
    static std::optional<DualF2> try_invert(DualF2 v) {
        if (!v.a)
            return std::nullopt;
        return v;
    }
    static DualF2 reduced(DualF2 v) { return {v.a, false}; }
    static std::optional<DualF2> symbol(std::string_view s) {
        if (s == "e")
            return DualF2::eps();
        return std::nullopt;
    }
    static std::string to_string(DualF2 v) {
        if (v.a && v.b)
            return "1+e";
        if (v.b)
            return "e";
        return v.a ? "1" : "0";
    }
    static std::string to_latex(DualF2 v) {
        if (v.a && v.b)
            return "1+\\epsilon";
        if (v.b)
            return "\\epsilon";
        return v.a ? "1" : "0";
    }
    static json to_json(DualF2 v) { return json::array({v.a ? 1 : 0, v.b ? 1 : 0}); }
    static DualF2 from_json(const json &j) {
        if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
            throw ParseError("expected [a, b], got " + j.dump());
        return {j[0].get<long long>() % 2 != 0, j[1].get<long long>() % 2 != 0};
    }
};

template <class C>
concept Coefficient = requires(const C &a, const C &b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a == b } -> std::convertible_to<bool>;
    { coeff_traits<C>::zero() } -> std::convertible_to<C>;
    { coeff_traits<C>::one() } -> std::convertible_to<C>;
    { coeff_traits<C>::is_zero(a) } -> std::convertible_to<bool>;
    { coeff_traits<C>::try_invert(a) } -> std::convertible_to<std::optional<C>>;
};

} // namespace nilk
