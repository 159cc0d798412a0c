#pragma once

#include <gtest/gtest.h>

#include "nilk/nilk.hpp"

namespace nilk::test {

inline Poly<Rational> Q(std::string_view s, const RingPtr &ring = rings::ts()) { return parse_poly<Rational>(s, ring); }
inline Poly<Rational> QZ(std::string_view s) { return parse_poly<Rational>(s, rings::tsz()); }
inline Poly<GaussianInt> G(std::string_view s) { return parse_poly<GaussianInt>(s, rings::x()); }
inline Poly<GroupRingZ4> ZG(std::string_view s) { return parse_poly<GroupRingZ4>(s, rings::x()); }
inline Poly<DualF2> D(std::string_view s) { return parse_poly<DualF2>(s, rings::x()); }
inline Poly<F2> F(std::string_view s) { return parse_poly<F2>(s, rings::x()); }

template <Coefficient C>
Matrix<C> M(const RingPtr &ring, std::initializer_list<std::initializer_list<const char *>> rows) {
    std::vector<std::vector<Poly<C>>> out;
    for (auto row : rows) {
        auto &r = out.emplace_back();
        for (auto cell : row)
            r.push_back(parse_poly<C>(cell, ring));
    }
    return Matrix<C>::from_rows(ring, out);
}

} // namespace nilk::test
