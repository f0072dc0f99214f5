#include "exalg/octonion.hpp"

#include <sstream>
#include <tuple>

#include "exalg/errors.hpp"

namespace exalg {

namespace {

int wrap(int i) { return ((i - 1) % 7 + 7) % 7 + 1; }

}  // namespace

MultiplicationTable derive_multiplication_table() {
  MultiplicationTable t{};
  for (int j = 0; j < 8; ++j) {
    t[0][j] = {1, j};
    t[j][0] = {1, j};
  }
  for (int i = 1; i < 8; ++i) t[i][i] = {-1, 0};
  for (int i = 1; i <= 7; ++i) {
    const int a = i, b = wrap(i + 1), c = wrap(i + 3);
    const int triple[3] = {a, b, c};
    for (int r = 0; r < 3; ++r) {
      int x = triple[r], y = triple[(r + 1) % 3], z = triple[(r + 2) % 3];
      for (auto [u, v, s] : {std::tuple{x, y, 1}, std::tuple{y, x, -1}}) {
        if (t[u][v].sign != 0 && !(t[u][v] == BasisProduct{s, z}))
          throw ValidationFailure("inconsistent octonion table");
        t[u][v] = {s, z};
      }
    }
  }
  for (const auto& row : t)
    for (const auto& e : row)
      if (e.sign == 0) throw ValidationFailure("octonion table not filled");
  if (!check_table_rules(t).ok()) throw ValidationFailure("octonion table violates defining rules");
  return t;
}

const MultiplicationTable& multiplication_table() {
  static const MultiplicationTable table = derive_multiplication_table();
  return table;
}

namespace {

BasisProduct compose(const MultiplicationTable& t, BasisProduct a, int j) {
  BasisProduct p = t[a.index][j];
  return {a.sign * p.sign, p.index};
}

BasisProduct compose_left(const MultiplicationTable& t, int i, BasisProduct b) {
  BasisProduct p = t[i][b.index];
  return {b.sign * p.sign, p.index};
}

}  // namespace

TableRuleReport check_table_rules(const MultiplicationTable& t) {
  TableRuleReport r;
  for (int j = 0; j < 8; ++j)
    if (!(t[0][j] == BasisProduct{1, j}) || !(t[j][0] == BasisProduct{1, j})) r.unit = false;
  for (int i = 1; i < 8; ++i)
    if (!(t[i][i] == BasisProduct{-1, 0})) r.squares = false;
  for (int i = 1; i <= 7; ++i) {
    const int a = i, b = wrap(i + 1), c = wrap(i + 3);
    BasisProduct left = compose_left(t, a, t[b][c]);
    BasisProduct right = compose(t, t[a][b], c);
    if (!(left == BasisProduct{-1, 0}) || !(right == BasisProduct{-1, 0})) r.triples = false;
  }
  return r;
}

Octonion Octonion::basis(int i) {
  Octonion x;
  x.c[i] = 1;
  return x;
}

Octonion Octonion::scalar(const Rational& r) {
  Octonion x;
  x.c[0] = r;
  return x;
}

bool Octonion::is_zero() const {
  for (const auto& v : c)
    if (v != 0) return false;
  return true;
}

Octonion Octonion::operator-() const {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
  return r;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Octonion operator*(const Rational& s, const Octonion& x) {
  Octonion r;
  for (int i = 0; i < 8; ++i) r.c[i] = s * x.c[i];
  return r;
}

Octonion mul(const Octonion& x, const Octonion& y) {
  const auto& t = multiplication_table();
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (y.c[j] == 0) continue;
      const BasisProduct& p = t[i][j];
      if (p.sign > 0)
        r.c[p.index] += x.c[i] * y.c[j];
      else
        r.c[p.index] -= x.c[i] * y.c[j];
    }
  }
  return r;
}

Octonion conj(const Octonion& x) {
  Octonion r = -x;
  r.c[0] = x.c[0];
  return r;
}

Rational trace(const Octonion& x) { return 2 * x.c[0]; }

Rational norm(const Octonion& x) {
  Rational s = 0;
  for (const auto& v : x.c) s += v * v;
  return s;
}

Rational bilinear(const Octonion& x, const Octonion& y) {
  Rational s = 0;
  for (int i = 0; i < 8; ++i) s += x.c[i] * y.c[i];
  return 2 * s;
}

std::string to_string(const Octonion& x) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 8; ++i) os << (i ? ", " : "") << x.c[i].get_str();
  os << "]";
  return os.str();
}

IntegralLattice::IntegralLattice(QMatrix basis) : basis_(std::move(basis)), inverse_(inverse(basis_)) {}

const IntegralLattice& IntegralLattice::standard() {
  static const IntegralLattice lattice = [] {
    const Rational h(1, 2);
    QMatrix b(8, 8);
    b(0, 0) = 1;
    b(1, 1) = 1;
    b(2, 2) = 1;
    b(3, 4) = -1;
    b(4, 1) = h, b(4, 2) = h, b(4, 3) = h, b(4, 4) = -h;
    b(5, 0) = -h, b(5, 1) = -h, b(5, 4) = -h, b(5, 5) = h;
    b(6, 0) = -h, b(6, 1) = h, b(6, 2) = -h, b(6, 6) = h;
    b(7, 0) = -h, b(7, 2) = h, b(7, 4) = h, b(7, 7) = h;
    return IntegralLattice(std::move(b));
  }();
  return lattice;
}

Octonion IntegralLattice::generator(int i) const {
  Octonion x;
  for (int j = 0; j < 8; ++j) x.c[j] = basis_(i, j);
  return x;
}

QVector IntegralLattice::coordinates(const Octonion& x) const {
  QVector r(8);
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k)
      if (x.c[k] != 0) r[j] += x.c[k] * inverse_(k, j);
  return r;
}

bool IntegralLattice::contains(const Octonion& x) const {
  for (const auto& v : coordinates(x))
    if (!is_integer(v)) return false;
  return true;
}

bool lattice_contains(const IntegralLattice& L, const Octonion& x) { return L.contains(x); }

}  // namespace exalg
