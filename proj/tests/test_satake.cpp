#include <doctest.h>

#include "exalg/errors.hpp"
#include "exalg/reference.hpp"
#include "exalg/satake.hpp"

using namespace exalg;

namespace {

Monomial m(const char* s) { return parse_monomial(s); }

}  // namespace

TEST_CASE("monomial syntax") {
  CHECK(m("p*b2/b3") == Monomial::gen(Gen::P) * Monomial::gen(Gen::B2) / Monomial::gen(Gen::B3));
  CHECK(m("p^-1*beta^-2").exponent2(Gen::Beta) == -4);
  CHECK(m("-alpha^3").sign == -1);
  CHECK(m("eps*eps") == Monomial::one());
  CHECK(m("1") == Monomial::one());
  for (const char* s : {"p^9*alpha^2", "eps*alpha/beta", "b^-1*p^-3", "-b1*b2^2"}) CHECK(m(to_string(m(s)).c_str()) == m(s));
  CHECK_THROWS_AS(m("p^(1/2)"), HalfExponentRejected);
  CHECK(parse_monomial("p^(1/2)", true).exponent2(Gen::P) == 1);
  CHECK_THROWS(m("p^"));
  CHECK_THROWS(m("gamma"));
}

TEST_CASE("monomial algebra") {
  Monomial x = m("eps*p^2*alpha/beta");
  CHECK(x * x.inverse() == Monomial::one());
  CHECK(x.pow(2) == m("p^4*alpha^2*beta^-2"));
  CHECK(specialize_eps(x, -1) == m("-p^2*alpha/beta"));
  CHECK(substitute(m("b*p"), Gen::B, m("p^2")) == m("p^3"));
  CHECK_THROWS_AS(substitute(parse_monomial("p^(1/2)", true), Gen::P, parse_monomial("p^(1/2)", true)),
                  HalfExponentRejected);
  CHECK(inversion_closed({m("p"), m("p^-1"), m("1")}));
  CHECK_FALSE(inversion_closed({m("p"), m("p")}));
  CHECK(same_multiset({m("p"), m("b")}, {m("b"), m("p")}));
}

TEST_CASE("character table") {
  CHECK(character_value(7, -1) == m("beta^2"));
  CHECK(character_value(5, -1) == m("b5*b6"));
  CHECK(character_value(6, -1) == m("b5/b6"));
  CHECK(character_value(2, 1) == m("b3/b2"));
}

TEST_CASE("constraint systems") {
  auto q2 = build_constraints(SatakeCase::Q2);
  REQUIRE(q2.equations.size() == expected::kRelationsQ2.size());
  for (std::size_t i = 0; i < q2.equations.size(); ++i)
    CHECK(q2.equations[i] == parse_equation(std::string(expected::kRelationsQ2[i])));
  auto q3 = build_constraints(SatakeCase::Q3);
  REQUIRE(q3.equations.size() == expected::kRelationsQ3.size());
  for (std::size_t i = 0; i < q3.equations.size(); ++i)
    CHECK(q3.equations[i] == parse_equation(std::string(expected::kRelationsQ3[i])));
  CHECK(parse_case("Q1") == SatakeCase::Q1);
  CHECK_THROWS_AS(parse_case("Q4"), UnknownTag);
}

TEST_CASE("solutions") {
  auto s3 = solve(SatakeCase::Q3);
  CHECK_FALSE(s3.contradiction);
  CHECK(s3.free_unknown == 3);
  CHECK(s3.torsion_rank == 1);
  CHECK(same_multiset(s3.multiset, family_I()));
  for (auto rel : expected::kDerivedQ3) CHECK(holds_under(parse_equation(std::string(rel)), s3.b));

  auto s2 = solve(SatakeCase::Q2);
  CHECK_FALSE(s2.contradiction);
  CHECK(s2.b[0] == m("eps*alpha*beta"));
  for (int k = 0; k < 4; ++k) CHECK(s2.b[k + 2] == m("eps*alpha/beta") * Monomial::gen(Gen::P, k + 1));
  CHECK(inversion_closed(s2.multiset));

  auto s1 = solve(SatakeCase::Q1);
  REQUIRE(s1.contradiction);
  CHECK((s1.contradiction->ratio() == m("p*beta^2") || s1.contradiction->ratio() == m("p*beta^2").inverse()));
  auto s0 = solve(SatakeCase::Q0);
  REQUIRE(s0.contradiction);
  CHECK(s0.contradiction->ratio() == m("p^-10*alpha^-2*beta^-2"));
}

TEST_CASE("Euler factors") {
  Multiset fam = gso_embed({m("b1"), m("b2"), m("b3"), m("b4"), m("b5"), m("b6")}, m("b"));
  CHECK(fam.size() == 12);
  auto f = standard_L_factor({m("p"), m("p^-1")});
  REQUIRE(f.degree() == 2);
  CHECK(f.coeffs[2] == LaurentPoly::constant(1));
  auto t = verify_degree12_factorization(1, Monomial::one());
  CHECK(t.holds);
  CHECK(t.degree == 12);
  CHECK_FALSE(verify_degree12_factorization(-1, Monomial::one()).holds);
  CHECK_FALSE(verify_degree12_factorization(1, m("p")).holds);
  CHECK(verify_eisenstein_specialization().holds);
  auto d = verify_degree56_factor();
  CHECK(d.degree == 56);
  CHECK(d.inversion_closed);
  CHECK(d.matches_weights);
}
