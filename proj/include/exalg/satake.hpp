#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exalg/rational.hpp"

namespace exalg {

enum class Gen { P, Alpha, Beta, B, B1, B2, B3, B4, B5, B6 };
inline constexpr int kGenCount = 10;
std::string gen_name(Gen g);

Gen b_gen(int i);  // b_i, i = 1..6

// sign * eps^eps * prod gen^(half/2). eps is the free sign parameter, kept mod 2.
struct Monomial {
  int sign = 1;
  int eps = 0;
  std::array<int, kGenCount> half{};

  static Monomial one() { return {}; }
  static Monomial gen(Gen g, int power = 1);
  static Monomial epsilon();

  int exponent2(Gen g) const { return half[static_cast<int>(g)]; }  // twice the exponent
  bool integral() const;
  bool is_one() const { return *this == one(); }

  Monomial inverse() const;
  Monomial pow(int k) const;
  auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial operator/(const Monomial& a, const Monomial& b);

// "p*b2/b3", "p^-1*beta^-2", "-alpha^3", "eps*alpha*beta", "p^1/2"; throws Error on bad syntax,
// HalfExponentRejected on a half exponent unless allowed.
Monomial parse_monomial(const std::string& s, bool allow_half = false);
std::string to_string(const Monomial& m);

// Replace gen g by value; throws HalfExponentRejected when a quarter exponent would result.
Monomial substitute(const Monomial& m, Gen g, const Monomial& value);
// Fix eps to +1 or -1.
Monomial specialize_eps(const Monomial& m, int eps);

using Multiset = std::vector<Monomial>;
Multiset sorted(Multiset m);
bool same_multiset(const Multiset& a, const Multiset& b);
bool inversion_closed(const Multiset& m);

struct CharacterRule {
  std::string element;
  Monomial value;
};
// chi_1(h_g7(p^-1)) = beta^2 and chi_2(h_gi(p^-1)) for i = 1..6.
std::vector<CharacterRule> borel_character_relations();
// Value of the Borel character on h_{gamma_j}(p^c): chi_1 for j = 7, chi_2 otherwise.
Monomial character_value(int j, int c);

enum class SatakeCase { Q0, Q1, Q2, Q3 };
SatakeCase parse_case(const std::string& s);
std::string to_string(SatakeCase c);

struct Equation {
  Monomial lhs, rhs;
  Monomial ratio() const { return lhs / rhs; }
  bool operator==(const Equation& o) const { return lhs == o.lhs && rhs == o.rhs; }
};
std::string to_string(const Equation& e);
Equation parse_equation(const std::string& s);  // "lhs = rhs"

struct TorusElement {
  std::string label;
  std::array<int, 7> t_exponent{};  // t_j = p^{k_j}
};

struct ConstraintSystem {
  SatakeCase which{};
  std::vector<TorusElement> elements;
  std::vector<Equation> equations;
};

ConstraintSystem build_constraints(SatakeCase c);

struct SatakeSolution {
  SatakeCase which{};
  std::optional<Equation> contradiction;  // set when no b_i survives and beta is forced off the unit circle
  std::array<Monomial, 6> b;              // b_1..b_6; the free unknown appears as generator b
  int free_unknown = 0;                   // 1-based index of the free b_i, 0 if none
  int torsion_rank = 0;                   // dimension of the GF(2) sign freedom (eps)
  Multiset multiset;                      // gso_embed(b, 1)
};

// Throws InconsistentSystem if back substitution fails.
SatakeSolution solve(const ConstraintSystem& sys);
SatakeSolution solve(SatakeCase c);

// Does the relation hold after substituting b_1..b_6?
bool holds_under(const Equation& rel, const std::array<Monomial, 6>& b);

Multiset gso_embed(const std::array<Monomial, 6>& b, const Monomial& b0 = Monomial::one());
Multiset family_I();   // eps and b generic
Multiset family_II();  // as printed

// Laurent polynomials in the generators with rational coefficients; keys are half-exponent vectors.
using LaurentKey = std::array<int, kGenCount>;
struct LaurentPoly {
  std::map<LaurentKey, Rational> terms;
  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Monomial& m);  // eps must already be specialized
  bool is_zero() const { return terms.empty(); }
  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
};
LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
std::string to_string(const LaurentPoly& p);

// Polynomial in T; coeffs[k] is the coefficient of T^k.
struct EulerFactor {
  std::vector<LaurentPoly> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const EulerFactor& o) const { return coeffs == o.coeffs; }
};
EulerFactor operator*(const EulerFactor& a, const EulerFactor& b);
// prod (1 - v T)
EulerFactor standard_L_factor(const Multiset& m);

struct IdentityResult {
  bool holds = false;
  int degree = 0;
  std::string detail;
};

// Family (I) at (eps, b) against the product of the degree-4 factor, zeta(s)^2 and zeta(s +- i), i = 1..3.
IdentityResult verify_degree12_factorization(int eps, const Monomial& b);
// beta -> p^{1/2}; also_alpha additionally sets alpha -> p^{1/2}.
IdentityResult verify_eisenstein_specialization(bool also_alpha = false);

struct Degree56Result {
  int degree = 0;
  bool inversion_closed = false;
  bool matches_weights = false;  // against the 56 weights of E7
  bool alpha_one_consistent = false;
  Multiset values;
};
Degree56Result verify_degree56_factor();

}  // namespace exalg
