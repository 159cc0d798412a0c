#pragma once

// Published matrices and words, transcribed as expression strings exactly as
// displayed (including the known misprints; see the corrected forms below).
// The constructions never read these; they are what computed results are
// compared against.

#include <array>
#include <string_view>
#include <utility>

namespace nilk::reference {

using Row2 = std::array<std::string_view, 2>;
using Matrix2 = std::array<Row2, 2>;

// Q[t,s] and Q[t,s,z,z^-1]

inline constexpr Matrix2 kUnitLift = {{{"1+s*t+s^2*t^2+s^3*t^3", "-s^2*t^2"}, {"s^2*t^2", "1-s*t"}}};

// Displayed factorization of the unit lift: e12(1+st) e21(-(1+st)) e12(1+st) [[0,-1],[1,0]]
inline constexpr std::string_view kUnitLiftFactorParam = "1+s*t";
inline constexpr std::string_view kUnitLiftMiddleFactorParam = "-(1+s*t)";

inline constexpr Matrix2 kClutchingFirst = {
    {{"1-s^4*t^4", "(-s^2*t^2)*(1+s*t+s^2*t^2+s^3*t^3)"}, {"s^3*t^3-s^2*t^2", "s^4*t^4"}}};
inline constexpr Matrix2 kClutchingSecond = {{{"1", "0"}, {"0", "0"}}};

// Contains s^2*t^3 inside the last factor; conjugation gives s^2*t^2.
inline constexpr Matrix2 kProjectorAsDisplayed = {
    {{"1-s^4*t^4", "s^2*t^2-s^3*t^3"}, {"s^2*t^2*(1+s*t+s^2*t^3+s^3*t^3)", "s^4*t^4"}}};
inline constexpr Matrix2 kProjectorCorrected = {
    {{"1-s^4*t^4", "s^2*t^2-s^3*t^3"}, {"s^2*t^2*(1+s*t+s^2*t^2+s^3*t^3)", "s^4*t^4"}}};

inline constexpr Matrix2 kLoopOfProjector = {
    {{"1+(z-1)*(1-s^4*t^4)", "(z-1)*(s^2*t^2-s^3*t^3)"},
     {"(z-1)*(s^2*t^2)*(1+s*t+s^2*t^2+s^3*t^3)", "1+(z-1)*(s^4*t^4)"}}};

inline constexpr Matrix2 kNormalizedIntermediate = {
    {{"z^-1+(1-z^-1)*(1-s^4*t^4)", "(z-1)*(s^2*t^2-s^3*t^3)"},
     {"(1-z^-1)*(s^2*t^2)*(1+s*t+s^2*t^2+s^3*t^3)", "1+(z-1)*(s^4*t^4)"}}};

// (1,1) reads 1-(1+z^-1)s^4t^4 in the theorem display.
inline constexpr Matrix2 kLaurentRepresentativeAsDisplayed = {
    {{"1-(1+z^-1)*s^4*t^4", "(z-1)*(s^2*t^2-s^3*t^3)"},
     {"(1-z^-1)*(s^2*t^2)*(1+s*t+s^2*t^2+s^3*t^3)", "1+(z-1)*(s^4*t^4)"}}};

inline constexpr Matrix2 kNilpotentPart = {
    {{"(1-z^-1)*s^4*t^4", "(1-z)*(s^2*t^2-s^3*t^3)"},
     {"(z^-1-1)*(s^2*t^2)*(1+s*t+s^2*t^2+s^3*t^3)", "(1-z)*(s^4*t^4)"}}};

inline constexpr std::array<std::array<std::string_view, 10>, 10> kCompanion10 = {{
    {"0", "0", "0", "(1-z)*t^2", "0", "(1-z)*(-t^3)", "(1-z^-1)*t^4", "0", "0", "0"},
    {"0", "0", "(z^-1-1)*t^2", "0", "(z^-1-1)*t^3", "0", "(z^-1-1)*t^4", "(1-z)*t^4", "(z^-1-1)*t^5", "0"},
    {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "1", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "1", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "0", "1", "0", "0"},
}};

// ZZ[i][x], ZZ[C4][x], F2[e]/(e^2)[x]

struct LetterText {
    std::size_t i;
    std::size_t j;
    std::string_view param;
};

inline constexpr std::array<LetterText, 4> kWordY = {
    {{2, 1, "-x+1-i+(1-i)*x^2"}, {1, 2, "1-i"}, {2, 1, "x+i-1"}, {1, 2, "i-1"}}};

inline constexpr std::array<LetterText, 6> kWordZ = {{{1, 2, "1"},
                                                      {2, 1, "-1"},
                                                      {1, 2, "1"},
                                                      {1, 2, "(i-1)*x-1"},
                                                      {2, 1, "1+(i-1)*x"},
                                                      {1, 2, "(i-1)*x-1"}}};

// Followed by h_12(1 - e x)^-1.
inline constexpr std::array<LetterText, 4> kWordXHead = {
    {{2, 1, "-x-e-e*x^2"}, {1, 2, "-e"}, {2, 1, "x+e"}, {1, 2, "e"}}};
inline constexpr std::string_view kWordXHUnit = "1-e*x";

inline constexpr Matrix2 kGroupRingRepresentative = {
    {{"1 - (1-sigma^2)*(x-2x^2+2x^3-sigma+x*sigma+x^2*sigma)",
      "(sigma^2-1)*(1+2x-x^2-x^3-2x^4+sigma-x*sigma-2x^2*sigma-3x^3*sigma+2x^4*sigma)"},
     {"(sigma^2-1)*(-1+2x-5x^2+7x^3-3x^4+2x^5-sigma+2x*sigma-2x^3*sigma+3x^4*sigma-2x^5*sigma)",
      "1 - (1-sigma^2)*(2+x-2x^2-4x^4-2x^5+sigma-3x*sigma-x^2*sigma-4x^3*sigma+6x^4*sigma-4x^5*sigma+4x^6*sigma)"}}};

} // namespace nilk::reference
