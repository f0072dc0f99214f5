#include <doctest.h>

#include <set>

#include "exalg/chevalley.hpp"
#include "exalg/errors.hpp"
#include "exalg/reference.hpp"

using namespace exalg;

namespace {

const E7Group& G() { return E7Group::instance(); }

std::set<std::string> strs(const std::vector<Root>& v) {
  std::set<std::string> s;
  for (const auto& r : v) s.insert(root_string(r));
  return s;
}

QMatrix bracket(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix scaled(const Rational& r, QMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= r;
  return m;
}

}  // namespace

TEST_CASE("structure constants") {
  const auto& rs = e7();
  auto sc = build_structure_constants(rs);
  CHECK(validate_structure_constants(rs, sc).ok());
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      Root a = RootSystemE7::simple(i), b = RootSystemE7::simple(j);
      if (rs.is_root(a + b)) CHECK(std::abs(sc.at(rs, a, b)) == 1);
    }
}

TEST_CASE("56-dimensional representation") {
  const auto& rep = G().rep();
  CHECK(rep.weights.size() == 56);
  CHECK(std::set<Weight>(rep.weights.begin(), rep.weights.end()).size() == 56);
  CHECK(rep.level[rep.top_index()] == 0);
  const auto& rs = G().roots();
  for (const auto& a : rs.positive_roots()) {
    QMatrix e = G().e(a), f = G().e(-a);
    CHECK((e * e).is_zero());
    QMatrix h = bracket(e, f);
    CHECK(bracket(h, e) == scaled(2, e));
  }
  for (const auto& a : rs.roots())
    for (const auto& b : {RootSystemE7::simple(3), RootSystemE7::simple(7)}) {
      QMatrix br = bracket(G().e(a), G().e(b));
      if (rs.is_root(a + b))
        CHECK(br == scaled(G().structure_constants().at(rs, a, b), G().e(a + b)));
      else if (a + b != Root{})
        CHECK(br.is_zero());
    }
}

TEST_CASE("adjoint coordinates") {
  QVector v(kAdjointDim);
  for (int k = 0; k < kAdjointDim; ++k) v[k] = Rational((k * 7) % 11 - 5);
  CHECK(G().to_adjoint(G().from_adjoint(v)) == v);
  QMatrix bad = QMatrix::identity(kRepDim);
  CHECK_THROWS_AS(G().to_adjoint(bad), DecompositionFailure);
}

TEST_CASE("group elements") {
  const auto& rs = G().roots();
  Root a = parse_root("0112221");
  CHECK(G().x_alpha(a, 2) * G().x_alpha(a, 3) == G().x_alpha(a, 5));
  CHECK((G().n_alpha(a) * G().n_alpha_inv(a)).is_identity());
  CHECK(G().h_alpha(a, 2) * G().h_alpha(a, Rational(1, 2)) == QMatrix::identity(kRepDim));
  CHECK_THROWS_AS(G().h_alpha(a, 0), ZeroScalar);
  CHECK((G().theta() * G().theta()).is_identity());
  CHECK(strs(G().theta_fixed_roots()) == strs(h_roots(rs)));
  CHECK(G().is_in_P(G().x_alpha(a, 7)));
  CHECK(G().is_in_P(G().n_alpha(RootSystemE7::simple(2))));
  CHECK_FALSE(G().is_in_P(G().n_alpha(RootSystemE7::simple(7))));
}

TEST_CASE("Siegel parabolic zero pattern") {
  CHECK(G().parabolic_zero_pattern().size() == 379);
  CHECK(G().identically_vanishing_count() == 838);
}

TEST_CASE("stabilizers") {
  const char* rows[] = {"D5T2U11", "A5A1T1U15", "A4T2U21", "B3A1T1U17"};
  for (int i = 0; i < 4; ++i) {
    QComputation q = G().compute_Q(i);
    CHECK(q.table_row() == rows[i]);
    CHECK(q.dim == q.n_basis.cols() + q.t_basis.cols() + q.levi_root_count);
  }
  QComputation q3 = G().compute_Q(3);
  CHECK(q3.diagonal_pairs.size() == 16);
  CHECK(strs(q3.fixed_roots) == std::set<std::string>{"2234321"});
}

TEST_CASE("modulus characters") {
  CHECK(G().modulus_exponents(ModulusTag::B1) == ExponentFunctional{0, 0, 0, 0, 0, 0, 2});
  CHECK(G().modulus_exponents(ModulusTag::B2) == ExponentFunctional{2, 2, 2, 2, 2, 2, 0});
  CHECK(G().modulus_exponents(ModulusTag::P_T0) == ExponentFunctional{18, 0, 0, 0, 0, 0, 18});
  CHECK(G().modulus_exponents(ModulusTag::Q3) == ExponentFunctional{0, 0, 0, 0, 18, 0, 0});
  CHECK(G().modulus_exponents(ModulusTag::Q2) == ExponentFunctional{0, 0, 0, 0, 14, 0, 4});
  CHECK(parse_modulus_tag("P-on-T2") == ModulusTag::P_T2);
  CHECK(to_string(ModulusTag::P_T2) == "P-on-T2");
  CHECK_THROWS(parse_modulus_tag("Q7"));
}

TEST_CASE("coset identities") {
  for (const auto& c : G().verify_coset_identities()) {
    INFO(c.name << ": " << c.detail);
    if (c.name == "n = n7 n6 n7^-1")
      CHECK(c.detail.find("n7 n6 n7^-1 = n^-1: yes") != std::string::npos);
    else
      CHECK(c.holds);
  }
}
