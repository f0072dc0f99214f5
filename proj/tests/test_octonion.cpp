#include <doctest.h>

#include <random>
#include <vector>

#include "exalg/octonion.hpp"

using namespace exalg;

namespace {

std::vector<Octonion> sample(unsigned seed, int n) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Octonion> out;
  for (int i = 0; i < n; ++i) {
    Octonion x;
    for (auto& c : x.c) {
      c = Rational(d(rng), 1 + (i % 3));
      c.canonicalize();
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("table follows e_i e_{i+1} = e_{i+3}") {
  const auto& t = multiplication_table();
  CHECK(check_table_rules(t).ok());
  for (int i = 1; i <= 7; ++i) {
    int j = i % 7 + 1, k = (i + 2) % 7 + 1;
    CHECK(t[i][j] == BasisProduct{1, k});
    CHECK(t[j][i] == BasisProduct{-1, k});
    CHECK(t[i][i] == BasisProduct{-1, 0});
  }
}

TEST_CASE("not associative") {
  auto e = [](int i) { return Octonion::basis(i); };
  CHECK(mul(mul(e(1), e(2)), e(3)) == -mul(e(1), mul(e(2), e(3))));
}

TEST_CASE("Moufang and alternative identities on random rationals") {
  auto xs = sample(11, 9);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      CHECK(mul(mul(x, x), y) == mul(x, mul(x, y)));
      CHECK(mul(mul(y, x), x) == mul(y, mul(x, x)));
      for (const auto& z : {xs[0], xs[4]}) CHECK(mul(z, mul(x, mul(z, y))) == mul(mul(mul(z, x), z), y));
    }
}

TEST_CASE("norm, trace and conjugation") {
  auto xs = sample(3, 12);
  for (const auto& x : xs) {
    CHECK(bilinear(x, x) == 2 * norm(x));
    CHECK(mul(x, conj(x)) == Octonion::scalar(norm(x)));
    CHECK(trace(x) == 2 * x.c[0]);
    for (const auto& y : xs) {
      CHECK(norm(mul(x, y)) == norm(x) * norm(y));
      CHECK(conj(mul(x, y)) == mul(conj(y), conj(x)));
    }
  }
}

TEST_CASE("integral order") {
  const auto& L = IntegralLattice::standard();
  CHECK(L.contains(Octonion::scalar(1)));
  Octonion half = Octonion::scalar(Rational(1, 2));
  CHECK_FALSE(L.contains(half));
  for (int i = 0; i < 8; ++i) {
    Octonion a = L.generator(i);
    CHECK(is_integer(norm(a)));
    CHECK(is_integer(trace(a)));
    CHECK(L.contains(conj(a)));
    for (int j = 0; j < 8; ++j) CHECK(L.contains(mul(a, L.generator(j))));
  }
  CHECK(determinant(L.basis()) != 0);
}
