#pragma once

// Published values the computations are compared against, transcribed as printed.

#include <array>
#include <string_view>

namespace exalg::expected {

inline constexpr std::array<std::string_view, 32> kSetX = {
    "0000010", "0000110", "0000011", "0001110", "0000111", "0101110", "0011110", "0001111",
    "1011110", "0111110", "0101111", "0011111", "1111110", "1011111", "0112110", "0111111",
    "1112110", "1111111", "0112210", "0112111", "1122110", "1112210", "1112111", "0112211",
    "1122210", "1122111", "1112211", "1123210", "1122211", "1223210", "1123211", "1223211"};

inline constexpr std::array<std::string_view, 16> kR1Trivial = {
    "0000011", "0000111", "0001111", "0101111", "0011111", "1011111", "0111111", "1111111",
    "0112111", "1112111", "0112211", "1122111", "1112211", "1122211", "1123211", "1223211"};

inline constexpr std::array<std::string_view, 11> kPhi0 = {"0000001", "0112221", "1112221", "1122221",
                                                           "1123221", "1123321", "1223221", "1223321",
                                                           "1224321", "1234321", "2234321"};

inline constexpr std::array<std::string_view, 15> kPhi1 = {"0000100", "0001100", "0101100", "0011100", "1011100",
                                                           "0111100", "1111100", "0112100", "1112100", "1122100",
                                                           "1123321", "1223321", "1224321", "1234321", "2234321"};

inline constexpr std::array<std::string_view, 21> kPhi2 = {
    "-0000001", "0000100", "0001100", "0101100", "0011100", "1011100", "0111100",
    "1111100",  "0112100", "1112100", "1122100", "0112221", "1112221", "1122221",
    "1123221",  "1223221", "1123321", "1223321", "1224321", "1234321", "2234321"};

struct RootPair {
  std::string_view alpha, image;
};
inline constexpr std::array<RootPair, 16> kSwappedPairs = {{
    {"1000000", "1112221"}, {"1011110", "1011111"}, {"1010000", "1122221"}, {"1111110", "1111111"},
    {"1011000", "1123221"}, {"1112110", "1112111"}, {"1011100", "1123321"}, {"1122110", "1122111"},
    {"1111000", "1223221"}, {"1112210", "1112211"}, {"1111100", "1223321"}, {"1122210", "1122211"},
    {"1112100", "1224321"}, {"1123210", "1123211"}, {"1122100", "1234321"}, {"1223210", "1223211"},
}};
inline constexpr std::string_view kUnpairedRoot = "2234321";

inline constexpr std::array<std::string_view, 4> kLeviTable = {"D5T2U11", "A5A1T1U15", "A4T2U21", "B3A1T1U17"};

// Exponents of |t_1| .. |t_7|.
struct ModulusRow {
  std::string_view tag;
  std::array<int, 7> exponents;
};
inline constexpr std::array<ModulusRow, 10> kModulus = {{
    {"Q0", {10, 2, 0, 0, 0, 0, 0}},
    {"P-on-T0", {18, 0, 0, 0, 0, 0, 18}},
    {"Q1", {0, 0, 0, 0, 10, 0, 0}},
    {"P-on-T1", {0, 0, 0, 0, 18, 0, 0}},
    {"Q2", {0, 0, 0, 0, 14, 0, 4}},
    {"P-on-T2", {0, 0, 0, 0, 18, 0, 0}},
    {"Q3", {0, 0, 0, 0, 18, 0, 0}},
    {"P-on-T3", {0, 0, 0, 0, 18, 0, 0}},
    {"B1", {0, 0, 0, 0, 0, 0, 2}},
    {"B2", {2, 2, 2, 2, 2, 2, 0}},
}};

inline constexpr std::array<std::string_view, 6> kRelationsQ2 = {
    "p*b2/b3 = 1", "p*b3/b4 = 1", "p*b4/b5 = 1", "p*b5/b6 = 1", "p*b1/b2*p*b5*b6 = p^9*alpha^2",
    "p^-1*beta^-2*p*b1/b2 = 1"};

inline constexpr std::array<std::string_view, 5> kRelationsQ3 = {
    "p*b3/b4 = 1", "p*b4/b5 = 1", "p*b5/b6 = 1", "p^3*b1*b2*b6^2/b3^2 = p^9*alpha^2", "p^-1*beta^-2*p*b1/b2 = 1"};

inline constexpr std::array<std::string_view, 7> kDerivedQ3 = {
    "b1*b2 = alpha^2", "b1/b2 = beta^2", "b1 = eps*alpha*beta", "b2 = eps*alpha/beta",
    "b4 = p*b3",       "b5 = p^2*b3",    "b6 = p^3*b3"};

inline constexpr std::string_view kContradictionQ0 = "beta^2 = p^-9";
inline constexpr std::string_view kContradictionQ1 = "p*beta^2 = 1";

inline constexpr std::array<std::string_view, 12> kFamilyI = {
    "eps*beta*alpha", "eps*beta^-1*alpha^-1", "eps*beta/alpha", "eps*alpha/beta", "b",       "b^-1",
    "b*p",            "b^-1*p^-1",            "b*p^2",          "b^-1*p^-2",      "b*p^3", "b^-1*p^-3"};

inline constexpr std::array<std::string_view, 12> kFamilyII = {
    "eps*beta*alpha",   "eps*beta^-1*alpha^-1", "eps*beta/alpha",   "eps*alpha/beta",
    "eps*beta/alpha*p", "eps*alpha/beta/p",     "eps*beta/alpha*p^2", "eps*alpha/beta/p^2",
    "eps*beta/alpha*p^3", "eps*alpha/beta/p^3", "eps*beta/alpha*p^4", "eps*alpha/beta/p^4"};

}  // namespace exalg::expected
