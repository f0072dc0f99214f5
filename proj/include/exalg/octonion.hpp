#pragma once

#include <array>
#include <string>

#include "exalg/linalg.hpp"
#include "exalg/rational.hpp"

namespace exalg {

// e_i * e_j = sign * e_index
struct BasisProduct {
  int sign = 0;
  int index = 0;
  bool operator==(const BasisProduct&) const = default;
};

using MultiplicationTable = std::array<std::array<BasisProduct, 8>, 8>;

// Built from e_i e_{i+1} = e_{i+3} (indices 1..7 mod 7), cyclic rotation of
// each such triple and anticommutativity. Throws ValidationFailure if the
// result breaks the unit, square or triple rules.
MultiplicationTable derive_multiplication_table();

// Cached copy of derive_multiplication_table().
const MultiplicationTable& multiplication_table();

struct TableRuleReport {
  bool unit = true;
  bool squares = true;
  bool triples = true;
  bool ok() const { return unit && squares && triples; }
};
TableRuleReport check_table_rules(const MultiplicationTable& t);

class Octonion {
 public:
  std::array<Rational, 8> c{};

  Octonion() = default;
  explicit Octonion(std::array<Rational, 8> coords) : c(std::move(coords)) {}
  static Octonion basis(int i);
  static Octonion scalar(const Rational& r);

  bool is_zero() const;
  Octonion operator-() const;
  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);
  friend Octonion operator*(const Rational& s, const Octonion& x);
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
  friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }
};

Octonion mul(const Octonion& x, const Octonion& y);
Octonion conj(const Octonion& x);
Rational trace(const Octonion& x);
Rational norm(const Octonion& x);
// tr(x conj(y)) = 2 <x, y>
Rational bilinear(const Octonion& x, const Octonion& y);

std::string to_string(const Octonion& x);

class IntegralLattice {
 public:
  // Rows are alpha_0 .. alpha_7 over e_0 .. e_7.
  explicit IntegralLattice(QMatrix basis);
  static const IntegralLattice& standard();

  const QMatrix& basis() const { return basis_; }
  Octonion generator(int i) const;
  QVector coordinates(const Octonion& x) const;
  bool contains(const Octonion& x) const;

 private:
  QMatrix basis_;
  QMatrix inverse_;
};

bool lattice_contains(const IntegralLattice& L, const Octonion& x);

}  // namespace exalg
