#include <doctest.h>

#include <cmath>
#include <numeric>

#include "exalg/errors.hpp"
#include "exalg/modforms.hpp"

using namespace exalg;

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(20) == Rational(-174611, 330));
  for (int n = 3; n < 30; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("Ramanujan tau") {
  QSeries d = delta_q(30);
  CHECK(d.coeffs[0] == 0);
  CHECK(d.coeffs[1] == 1);
  CHECK(d.coeffs[2] == -24);
  CHECK(d.coeffs[3] == 252);
  CHECK(d.coeffs[4] == -1472);
  CHECK(d.coeffs[5] == 4830);
  for (int m = 2; m <= 5; ++m)
    for (int n = m + 1; n * m <= 30; ++n)
      if (std::gcd(m, n) == 1) CHECK(d.coeffs[m * n] == d.coeffs[m] * d.coeffs[n]);
  CHECK(d.coeffs[4] == d.coeffs[2] * d.coeffs[2] - 2048);
}

TEST_CASE("Eisenstein series") {
  QSeries e4 = eisenstein_q(4, 10), e6 = eisenstein_q(6, 10);
  CHECK(e4.coeffs[1] == 240);
  CHECK(e4.coeffs[2] == 2160);
  CHECK(e6.coeffs[1] == -504);
  CHECK(eisenstein_q(8, 10) == (e4 * e4));
  CHECK((e4 * e4 * e4 - e6 * e6) == Rational(1728) * delta_q(10));
}

TEST_CASE("Hecke operators") {
  QSeries d = delta_q(60);
  CHECK(hecke_Tp(d, 2, 30) == Rational(-24) * d.truncated(30));
  CHECK(hecke_Tp(d, 5).order() == 12);
  CHECK_THROWS_AS(hecke_Tp(d, 2, 31), InsufficientTruncation);
  auto h = hecke_matrix_weight24(2);
  CHECK(h.charpoly == std::vector<Integer>{1, -1080, -20468736});
  CHECK(h.discriminant == Integer(1080) * 1080 + 4 * Integer(20468736));
  auto h3 = hecke_matrix_weight24(3);
  CHECK(h.matrix * h3.matrix == h3.matrix * h.matrix);
}

TEST_CASE("Satake normalization") {
  auto s = satake_pair(12, 2, -24);
  CHECK(s.normalized_trace == doctest::Approx(-24 / std::pow(2.0, 5.5)));
  auto [re, im] = s.alpha_re_im();
  CHECK(re * re + im * im == doctest::Approx(1.0));
  CHECK_THROWS_AS(satake_pair(12, 2, 91), RamanujanViolation);
  CHECK_NOTHROW(satake_pair(12, 2, -90));
}

TEST_CASE("surds") {
  CHECK(Surd::sqrt_of(2) * Surd::sqrt_of(2) == Surd::rational(2));
  CHECK(Surd::sqrt_of(12) == Surd::rational(2) * Surd::sqrt_of(3));
  CHECK(Surd::power_half(4, 3) == Surd::rational(8));
  CHECK(Surd::power_half(2, -1) == Surd::rational(Rational(1, 2)) * Surd::sqrt_of(2));
  CHECK_FALSE((Surd::sqrt_of(2) + Surd::sqrt_of(3)).is_rational());
  CHECK(Surd::sqrt_of(2).approx() == doctest::Approx(1.41421356));
}

TEST_CASE("normalising constant") {
  Rational c = eisenstein_constant(6);
  CHECK(c == Rational(32768) * 20 / bernoulli(20) * 16 / bernoulli(16) * 12 / bernoulli(12));
  CHECK(c < 0);
  CHECK(to_string(c) == "-57813321646080000/436413479017");
}

TEST_CASE("lift coefficients") {
  auto oracle = std::make_shared<JsonFixtureOracle>(
      JsonFixtureOracle::from_string(R"([{"det": 4, "p": 2, "coeffs": {"0": "1"}},
                                         {"det": "2", "p": 2, "coeffs": {"0": "1", "1": "1/2"}}])"));
  LiftCoefficientPlan one{Jordan3::identity(), 6, oracle};
  auto a = lift_coefficient(one);
  REQUIRE(a.value);
  CHECK(*a.value == Surd::rational(1));

  LiftCoefficientPlan four{Jordan3::diag(1, 1, 4), 6, oracle};
  auto b = lift_coefficient(four);
  REQUIRE(b.value);
  CHECK(*b.value == Surd::rational(2048));
  CHECK(b.eisenstein == Surd::rational(eisenstein_constant(6) * 2048));

  LiftCoefficientPlan two{Jordan3::diag(1, 1, 2), 6, oracle};
  auto c = lift_coefficient(two);
  CHECK_FALSE(c.value);
  CHECK_FALSE(c.eisenstein.is_rational());

  CHECK_THROWS_AS(lift_coefficient({Jordan3::diag(1, 1, 3), 6, oracle}), OracleMissing);
  CHECK_THROWS(lift_coefficient({Jordan3::diag(1, -1, 3), 6, oracle}));
  CHECK_THROWS(lift_coefficient({Jordan3::diag(Rational(1, 2), 1, 3), 6, oracle}));
  CHECK(prime_divisors(360) == std::vector<long>{2, 3, 5});
}
