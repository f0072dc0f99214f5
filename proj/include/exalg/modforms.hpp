#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exalg/jordan.hpp"
#include "exalg/linalg.hpp"
#include "exalg/rational.hpp"

namespace exalg {

// q = exp(2 pi i tau); coeffs[n] is the coefficient of q^n, n = 0..order.
struct QSeries {
  int weight = 0;
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  QSeries truncated(std::size_t n) const;
  bool operator==(const QSeries& o) const { return weight == o.weight && coeffs == o.coeffs; }
};
QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);  // weights add; truncates to the shorter order
QSeries operator*(const Rational& s, const QSeries& a);

Rational bernoulli(int n);
// 2^15 prod_{n=0}^{2} (2k+8-4n) / B_{2k+8-4n}
Rational eisenstein_constant(int k);

QSeries eisenstein_q(int weight, std::size_t order);
QSeries delta_q(std::size_t order);
// Delta * E_{w-12}; the cusp form of weight w when S_w is one-dimensional.
QSeries cusp_generator(int weight, std::size_t order);

// (T_p F)(n) = c(np) + p^{w-1} c(n/p) for n <= out_order; throws InsufficientTruncation if p*out_order > order.
QSeries hecke_Tp(const QSeries& F, long p, std::size_t out_order);
QSeries hecke_Tp(const QSeries& F, long p);  // largest valid order

struct HeckeMatrix {
  QMatrix matrix;                 // action on the echelon basis (q + ..., q^2 + ...)
  std::vector<Integer> charpoly;  // monic, highest degree first
  Integer discriminant;
};
// T_p on S_24, spanned by Delta E_4^3 and Delta^2.
HeckeMatrix hecke_matrix_weight24(long p, std::size_t order = 60);

struct SatakeNormalization {
  int weight = 0;
  long p = 0;
  Integer c;
  double normalized_trace = 0;  // c / p^{(w-1)/2}
  // alpha, alpha^{-1} as complex numbers on the unit circle; numeric specialization only
  std::pair<double, double> alpha_re_im() const;
};
// Throws RamanujanViolation when c^2 > 4 p^{w-1}.
SatakeNormalization satake_pair(int weight, long p, const Integer& c);

// Sum of rational multiples of square roots of squarefree integers.
struct Surd {
  std::map<Integer, Rational> terms;  // squarefree radicand -> coefficient

  static Surd rational(const Rational& r);
  static Surd sqrt_of(const Integer& n);  // n >= 0
  static Surd power_half(const Integer& n, long twice_exponent);  // n^{e/2}, n > 0
  bool is_rational() const;
  Rational rational_part() const;
  double approx() const;
  bool operator==(const Surd& o) const { return terms == o.terms; }
};
Surd operator+(const Surd& a, const Surd& b);
Surd operator*(const Surd& a, const Surd& b);
std::string to_string(const Surd& s);

// Laurent polynomial in one variable X: exponent -> coefficient.
using LaurentX = std::map<int, Rational>;

class LocalPolynomialOracle {
 public:
  virtual ~LocalPolynomialOracle() = default;
  virtual std::optional<LaurentX> local_polynomial(const Jordan3& T, long p) const = 0;
};

// Fixtures: [{"det": 4, "p": 2, "coeffs": {"-1": "1/2", "0": "1"}}, ...], keyed by (det(T), p).
class JsonFixtureOracle : public LocalPolynomialOracle {
 public:
  static JsonFixtureOracle from_file(const std::string& path);
  static JsonFixtureOracle from_string(const std::string& json);
  std::optional<LaurentX> local_polynomial(const Jordan3& T, long p) const override;
  void insert(const Integer& det, long p, LaurentX poly);

 private:
  std::map<std::pair<Integer, long>, LaurentX> table_;
};

struct LiftCoefficientPlan {
  Jordan3 T;
  int k = 0;
  std::shared_ptr<const LocalPolynomialOracle> oracle;
};

struct LiftCoefficient {
  Integer det;
  int det_twice_exponent = 0;  // det^{(2k-1)/2}
  Surd det_power;
  std::vector<std::pair<long, LaurentX>> local;  // per prime p | det
  std::optional<Surd> value;                     // A(T) when every local factor is constant
  Surd eisenstein;                               // a_{2k+8}(T) with X = p^{(2k-1)/2}
};

std::vector<long> prime_divisors(const Integer& n);
// Throws Error for T outside the positive cone or non-integral; OracleMissing for an absent local factor.
LiftCoefficient lift_coefficient(const LiftCoefficientPlan& plan);

}  // namespace exalg
