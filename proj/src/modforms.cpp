#include "exalg/modforms.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "exalg/errors.hpp"

namespace exalg {

QSeries QSeries::truncated(std::size_t n) const {
  if (n > order()) throw InsufficientTruncation("cannot extend a truncated series");
  QSeries r{weight, std::vector<Rational>(coeffs.begin(), coeffs.begin() + n + 1)};
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (a.weight != b.weight) throw Error("adding series of different weight");
  std::size_t n = std::min(a.order(), b.order());
  QSeries r{a.weight, std::vector<Rational>(n + 1)};
  for (std::size_t i = 0; i <= n; ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + Rational(-1) * b; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  QSeries r{a.weight + b.weight, std::vector<Rational>(n + 1)};
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      if (b.coeffs[j] != 0) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

QSeries operator*(const Rational& s, const QSeries& a) {
  QSeries r = a;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw Error("negative Bernoulli index");
  if (n > 1 && n % 2 == 1) return 0;
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0
  std::vector<Rational> B(n + 1);
  B[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer binom = 1;
    Rational s = 0;
    for (int j = 0; j < m; ++j) {
      s += binom * B[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[m] = -s / (m + 1);
  }
  return B[n];
}

Rational eisenstein_constant(int k) {
  if (k < 6) throw Error("eisenstein_constant needs k >= 6");
  Rational c = 32768;
  for (int n = 0; n <= 2; ++n) {
    int w = 2 * k + 8 - 4 * n;
    c *= Rational(w) / bernoulli(w);
  }
  return c;
}

QSeries eisenstein_q(int weight, std::size_t order) {
  if (weight < 4 || weight % 2 != 0) throw Error("Eisenstein series needs even weight >= 4");
  QSeries e{weight, std::vector<Rational>(order + 1)};
  e.coeffs[0] = 1;
  Rational scale = -Rational(2 * weight) / bernoulli(weight);
  for (std::size_t n = 1; n <= order; ++n) {
    Integer sigma = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), d, weight - 1);
        sigma += t;
      }
    e.coeffs[n] = scale * sigma;
  }
  return e;
}

QSeries delta_q(std::size_t order) {
  // q prod (1 - q^n)^24
  std::vector<Rational> prod(order + 1);
  prod[0] = 1;
  for (std::size_t n = 1; n <= order; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = order; i >= n; --i) prod[i] -= prod[i - n];
  QSeries d{12, std::vector<Rational>(order + 1)};
  for (std::size_t i = 1; i <= order; ++i) d.coeffs[i] = prod[i - 1];
  return d;
}

QSeries cusp_generator(int weight, std::size_t order) {
  QSeries d = delta_q(order);
  if (weight == 12) return d;
  return d * eisenstein_q(weight - 12, order);
}

QSeries hecke_Tp(const QSeries& F, long p, std::size_t out_order) {
  if (p < 2) throw Error("hecke_Tp needs a prime");
  if (static_cast<std::size_t>(p) * out_order > F.order())
    throw InsufficientTruncation("T_" + std::to_string(p) + " to order " + std::to_string(out_order) +
                                 " needs input order " + std::to_string(p * out_order));
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), p, F.weight - 1);
  QSeries r{F.weight, std::vector<Rational>(out_order + 1)};
  for (std::size_t n = 0; n <= out_order; ++n) {
    r.coeffs[n] = F.coeffs[n * p];
    if (n % p == 0) r.coeffs[n] += pw * F.coeffs[n / p];
  }
  return r;
}

QSeries hecke_Tp(const QSeries& F, long p) { return hecke_Tp(F, p, F.order() / p); }

HeckeMatrix hecke_matrix_weight24(long p, std::size_t order) {
  QSeries d = delta_q(order);
  QSeries e4 = eisenstein_q(4, order);
  QSeries f2 = d * d;
  QSeries f1 = d * e4 * e4 * e4;
  f1 = f1 - f1.coeffs[2] * f2;
  QSeries t1 = hecke_Tp(f1, p), t2 = hecke_Tp(f2, p);
  HeckeMatrix h;
  h.matrix = QMatrix(2, 2);
  h.matrix(0, 0) = t1.coeffs[1];
  h.matrix(1, 0) = t1.coeffs[2];
  h.matrix(0, 1) = t2.coeffs[1];
  h.matrix(1, 1) = t2.coeffs[2];
  // the image must lie in the span
  for (auto [t, col] : {std::pair{&t1, 0}, std::pair{&t2, 1}}) {
    QSeries recon = h.matrix(0, col) * f1.truncated(t->order()) + h.matrix(1, col) * f2.truncated(t->order());
    if (!(recon == *t)) throw ValidationFailure("T_p does not preserve the weight 24 cusp space");
  }
  Rational tr = h.matrix(0, 0) + h.matrix(1, 1);
  Rational det = h.matrix(0, 0) * h.matrix(1, 1) - h.matrix(0, 1) * h.matrix(1, 0);
  if (!is_integer(tr) || !is_integer(det)) throw ValidationFailure("non-integral Hecke matrix");
  h.charpoly = {1, -tr.get_num(), det.get_num()};
  h.discriminant = tr.get_num() * tr.get_num() - 4 * det.get_num();
  return h;
}

std::pair<double, double> SatakeNormalization::alpha_re_im() const {
  double re = normalized_trace / 2;
  return {re, std::sqrt(std::max(0.0, 1 - re * re))};
}

SatakeNormalization satake_pair(int weight, long p, const Integer& c) {
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), p, weight - 1);
  bound *= 4;
  if (c * c > bound)
    throw RamanujanViolation("c(p)^2 = " + to_string(Integer(c * c)) + " exceeds 4 p^{w-1} = " + to_string(bound));
  SatakeNormalization s;
  s.weight = weight;
  s.p = p;
  s.c = c;
  s.normalized_trace = c.get_d() / std::pow(static_cast<double>(p), (weight - 1) / 2.0);
  return s;
}

namespace {

// n = square * squarefree
std::pair<Integer, Integer> split_square(Integer n) {
  Integer square_root = 1, free = 1;
  for (Integer q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) n /= q, ++e;
    for (int i = 0; i < e / 2; ++i) square_root *= q;
    if (e % 2) free *= q;
  }
  free *= n;
  return {square_root, free};
}

}  // namespace

Surd Surd::rational(const Rational& r) {
  Surd s;
  if (r != 0) s.terms[1] = r;
  return s;
}

Surd Surd::sqrt_of(const Integer& n) {
  if (n < 0) throw Error("square root of a negative integer");
  if (n == 0) return {};
  auto [sq, free] = split_square(n);
  Surd s;
  s.terms[free] = Rational(sq);
  return s;
}

Surd Surd::power_half(const Integer& n, long twice_exponent) {
  if (n <= 0) throw Error("power_half needs a positive base");
  long e = twice_exponent;
  long whole = e >= 0 ? e / 2 : -((-e + 1) / 2);
  Integer pw;
  mpz_pow_ui(pw.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(std::labs(whole)));
  Rational base = whole >= 0 ? Rational(pw) : Rational(1) / Rational(pw);
  Surd s = rational(base);
  if (e - 2 * whole == 1) s = s * sqrt_of(n);
  return s;
}

bool Surd::is_rational() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first == 1); }

Rational Surd::rational_part() const {
  auto it = terms.find(1);
  return it == terms.end() ? Rational(0) : it->second;
}

double Surd::approx() const {
  double s = 0;
  for (const auto& [r, c] : terms) s += c.get_d() * std::sqrt(r.get_d());
  return s;
}

Surd operator+(const Surd& a, const Surd& b) {
  Surd r = a;
  for (const auto& [k, v] : b.terms) {
    Rational& t = r.terms[k];
    t += v;
    if (t == 0) r.terms.erase(k);
  }
  return r;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd r;
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), ka.get_mpz_t(), kb.get_mpz_t());
      Integer rad = ka * kb / (g * g);
      Rational& t = r.terms[rad];
      t += va * vb * g;
      if (t == 0) r.terms.erase(rad);
    }
  return r;
}

std::string to_string(const Surd& s) {
  if (s.terms.empty()) return "0";
  std::string out;
  for (const auto& [r, c] : s.terms) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (r != 1) out += "*sqrt(" + to_string(r) + ")";
  }
  return out;
}

JsonFixtureOracle JsonFixtureOracle::from_string(const std::string& text) {
  JsonFixtureOracle o;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad oracle fixture: ") + e.what());
  }
  if (!j.is_array()) throw Error("oracle fixture must be a JSON array");
  for (const auto& entry : j) {
    const auto& dj = entry.at("det");
    Integer det = dj.is_string() ? Integer(dj.get<std::string>()) : Integer(dj.get<long>());
    long p = entry.at("p").get<long>();
    LaurentX poly;
    for (const auto& [e, c] : entry.at("coeffs").items()) poly[std::stoi(e)] = parse_rational(c.get<std::string>());
    o.insert(det, p, std::move(poly));
  }
  return o;
}

JsonFixtureOracle JsonFixtureOracle::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open oracle fixture " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

void JsonFixtureOracle::insert(const Integer& det, long p, LaurentX poly) { table_[{det, p}] = std::move(poly); }

std::optional<LaurentX> JsonFixtureOracle::local_polynomial(const Jordan3& T, long p) const {
  Rational d = det3(T);
  if (!is_integer(d)) return std::nullopt;
  auto it = table_.find({d.get_num(), p});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<long> prime_divisors(const Integer& n0) {
  Integer n = abs(n0);
  std::vector<long> out;
  for (long q = 2; Integer(q) * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) {
    if (!n.fits_slong_p()) throw Error("prime factor too large");
    out.push_back(n.get_si());
  }
  return out;
}

LiftCoefficient lift_coefficient(const LiftCoefficientPlan& plan) {
  if (!is_integral(plan.T)) throw Error("T is not integral");
  if (cone_membership3(plan.T) != Cone::Positive) throw Error("T is not positive definite");
  Rational d = det3(plan.T);
  if (!is_integer(d) || d <= 0) throw Error("det(T) must be a positive integer");
  LiftCoefficient out;
  out.det = d.get_num();
  out.det_twice_exponent = 2 * plan.k - 1;
  out.det_power = Surd::power_half(out.det, out.det_twice_exponent);
  bool constant = true;
  Surd eis = Surd::rational(eisenstein_constant(plan.k)) * out.det_power;
  Surd value = out.det_power;
  for (long p : prime_divisors(out.det)) {
    if (!plan.oracle) throw OracleMissing("no local polynomial oracle");
    auto poly = plan.oracle->local_polynomial(plan.T, p);
    if (!poly) throw OracleMissing("no local polynomial for det " + to_string(out.det) + ", p " + std::to_string(p));
    Surd at_p;
    for (const auto& [e, c] : *poly) {
      if (c == 0) continue;
      at_p = at_p + Surd::rational(c) * Surd::power_half(Integer(p), static_cast<long>(e) * out.det_twice_exponent);
      if (e != 0) constant = false;
    }
    eis = eis * at_p;
    if (constant) value = value * Surd::rational(poly->count(0) ? poly->at(0) : Rational(0));
    out.local.push_back({p, *poly});
  }
  if (constant) out.value = value;
  out.eisenstein = eis;
  return out;
}

}  // namespace exalg
