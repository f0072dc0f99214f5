#include <doctest.h>

#include <random>

#include "exalg/errors.hpp"
#include "exalg/jordan.hpp"

using namespace exalg;

namespace {

Octonion small(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  Octonion x;
  for (auto& c : x.c) c = d(rng);
  return x;
}

// X o X for a 2x2 matrix
Jordan2 square(const Jordan2& X) { return {X.a * X.a + norm(X.x), X.b * X.b + norm(X.x), (X.a + X.b) * X.x}; }

}  // namespace

TEST_CASE("determinants") {
  CHECK(det2(Jordan2::identity()) == 1);
  CHECK(det3(Jordan3::identity()) == 1);
  CHECK(det3(Jordan3::diag(2, 3, 5)) == 30);
  Octonion x = Octonion::basis(1) + Octonion::basis(2);
  CHECK(det2({3, 1, x}) == 1);
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    Jordan2 X{i - 15, 2 * i, small(rng)};
    CHECK(det3(embed_block(X, i)) == Rational(i) * det2(X));
  }
}

TEST_CASE("cone membership") {
  CHECK(cone_membership2(Jordan2::identity()) == Cone::Positive);
  CHECK(cone_membership2({1, 0, Octonion{}}) == Cone::Semipositive);
  CHECK(cone_membership2({1, 1, Octonion::basis(3)}) == Cone::Semipositive);
  CHECK(cone_membership2({1, 1, 2 * Octonion::basis(3)}) == Cone::Neither);
  CHECK(cone_membership3(Jordan3::identity()) == Cone::Positive);
  CHECK(cone_membership3(Jordan3::diag(0, 0, 0)) == Cone::Semipositive);
  CHECK(cone_membership3(Jordan3::diag(-1, 1, 1)) == Cone::Neither);
}

TEST_CASE("squares of invertible elements are positive") {
  std::mt19937 rng(9);
  int tested = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      Jordan2 X{a, b, small(rng)};
      if (det2(X) == 0) continue;
      ++tested;
      CHECK(cone_membership2(square(X)) == Cone::Positive);
    }
  CHECK(tested > 30);
}

TEST_CASE("tube action") {
  std::mt19937 rng(2);
  TubePoint2 iI(Jordan2{0, 0, Octonion{}}, Jordan2::identity());
  CHECK(invert2(iI) == iI);
  CHECK(det(iI) == Complex(-1));
  for (int k = 1; k <= 20; ++k) {
    Octonion y = small(rng);
    Jordan2 im{k % 4 + 1, norm(y) + 1, y};
    TubePoint2 Z(Jordan2{k, -k, small(rng)}, im);
    TubePoint2 W = invert2(Z);
    CHECK(in_tube(W.re, W.im));
    CHECK(invert2(W) == Z);
    CHECK(automorphy(InversionGen{}, W) * automorphy(InversionGen{}, Z) == Complex(1));
    Jordan2 B{1, -2, Octonion::basis(0)};
    auto r = apply_word(GammaWord{TranslateGen{B}}, Z);
    CHECK(r.Z.re == Z.re + B);
    CHECK(r.j == Complex(1));
    auto w4 = apply_word(GammaWord{RotateGen{RotateGen::Kind::Weyl, {}}, RotateGen{RotateGen::Kind::Weyl, {}}}, Z);
    CHECK(apply_word(GammaWord{RotateGen{RotateGen::Kind::Weyl, {}}, RotateGen{RotateGen::Kind::Weyl, {}}}, w4.Z).Z == Z);
  }
}

TEST_CASE("generators must be integral") {
  GammaWord w;
  CHECK_THROWS_AS(w.push(RotateGen{RotateGen::Kind::Unipotent, Octonion::scalar(Rational(1, 3))}), InvalidGenerator);
  CHECK_THROWS_AS(w.push(TranslateGen{Jordan2{Rational(1, 2), 0, Octonion{}}}), InvalidGenerator);
  CHECK_NOTHROW(w.push(TranslateGen{Jordan2{1, 0, Octonion{}}}));
}
