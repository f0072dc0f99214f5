#include "exalg/satake.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "exalg/chevalley.hpp"
#include "exalg/errors.hpp"
#include "exalg/linalg.hpp"

namespace exalg {

namespace {

constexpr const char* kGenNames[kGenCount] = {"p", "alpha", "beta", "b", "b1", "b2", "b3", "b4", "b5", "b6"};

int idx(Gen g) { return static_cast<int>(g); }

}  // namespace

std::string gen_name(Gen g) { return kGenNames[idx(g)]; }

Gen b_gen(int i) {
  if (i < 1 || i > 6) throw Error("b index out of range");
  return static_cast<Gen>(idx(Gen::B1) + i - 1);
}

Monomial Monomial::gen(Gen g, int power) {
  Monomial m;
  m.half[idx(g)] = 2 * power;
  return m;
}

Monomial Monomial::epsilon() {
  Monomial m;
  m.eps = 1;
  return m;
}

bool Monomial::integral() const {
  return std::all_of(half.begin(), half.end(), [](int h) { return h % 2 == 0; });
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& h : m.half) h = -h;
  return m;
}

Monomial Monomial::pow(int k) const {
  Monomial m;
  m.sign = (k % 2 == 0) ? 1 : sign;
  m.eps = ((eps * k) % 2 + 2) % 2;
  for (int i = 0; i < kGenCount; ++i) m.half[i] = half[i] * k;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.sign = a.sign * b.sign;
  m.eps = (a.eps + b.eps) % 2;
  for (int i = 0; i < kGenCount; ++i) m.half[i] = a.half[i] + b.half[i];
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

Monomial parse_monomial(const std::string& text, bool allow_half) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("empty monomial");
  Monomial m;
  std::size_t i = 0;
  if (s[0] == '-') m.sign = -1, i = 1;
  bool divide = false;
  auto parse_int = [&](std::size_t& k) {
    std::size_t start = k;
    if (k < s.size() && s[k] == '-') ++k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == start || (s[start] == '-' && k == start + 1)) throw Error("expected integer in '" + text + "'");
    return std::stoi(s.substr(start, k - start));
  };
  while (i < s.size()) {
    std::size_t start = i;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
    std::string name = s.substr(start, i - start);
    if (name.empty()) throw Error("bad monomial '" + text + "'");
    int twice = 2;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool paren = i < s.size() && s[i] == '(';
      if (paren) ++i;
      int num = parse_int(i);
      int den = 1;
      if (paren && i < s.size() && s[i] == '/') {
        ++i;
        den = parse_int(i);
      }
      if (paren) {
        if (i >= s.size() || s[i] != ')') throw Error("unbalanced parenthesis in '" + text + "'");
        ++i;
      }
      if (den == 1) {
        twice = 2 * num;
      } else if (den == 2) {
        if (!allow_half) throw HalfExponentRejected("half exponent in '" + text + "'");
        twice = num;
      } else {
        throw Error("exponent denominator must be 1 or 2");
      }
    }
    Monomial f;
    if (name == "1") {
      if (twice != 2) throw Error("exponent on 1");
    } else if (name == "eps") {
      f.eps = ((twice / 2) % 2 + 2) % 2;
    } else {
      const auto* it = std::find(std::begin(kGenNames), std::end(kGenNames), name);
      if (it == std::end(kGenNames)) throw Error("unknown generator '" + name + "'");
      f.half[it - std::begin(kGenNames)] = twice;
    }
    m = divide ? m / f : m * f;
    if (i == s.size()) break;
    if (s[i] != '*' && s[i] != '/') throw Error("unexpected '" + std::string(1, s[i]) + "' in '" + text + "'");
    divide = s[i] == '/';
    ++i;
    if (i == s.size()) throw Error("trailing operator in '" + text + "'");
  }
  return m;
}

std::string to_string(const Monomial& m) {
  std::vector<std::string> parts;
  if (m.eps) parts.push_back("eps");
  for (int g = 0; g < kGenCount; ++g) {
    int h = m.half[g];
    if (h == 0) continue;
    std::string f = kGenNames[g];
    if (h % 2 != 0)
      f += "^(" + std::to_string(h) + "/2)";
    else if (h != 2)
      f += "^" + std::to_string(h / 2);
    parts.push_back(f);
  }
  std::string out = m.sign < 0 ? "-" : "";
  if (parts.empty()) return out + "1";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

Monomial substitute(const Monomial& m, Gen g, const Monomial& value) {
  int k2 = m.half[idx(g)];
  Monomial rest = m;
  rest.half[idx(g)] = 0;
  if (k2 % 2 == 0) return rest * value.pow(k2 / 2);
  if (value.sign != 1 || value.eps != 0 || !value.integral())
    throw HalfExponentRejected("half power of " + to_string(value));
  Monomial v;
  for (int i = 0; i < kGenCount; ++i) v.half[i] = k2 * value.half[i] / 2;
  return rest * v;
}

Monomial specialize_eps(const Monomial& m, int eps) {
  Monomial r = m;
  if (r.eps && eps == -1) r.sign = -r.sign;
  r.eps = 0;
  return r;
}

Multiset sorted(Multiset m) {
  std::sort(m.begin(), m.end());
  return m;
}

bool same_multiset(const Multiset& a, const Multiset& b) { return sorted(a) == sorted(b); }

bool inversion_closed(const Multiset& m) {
  Multiset inv;
  for (const auto& v : m) inv.push_back(v.inverse());
  return same_multiset(m, inv);
}

Monomial character_value(int j, int c) {
  if (j == 7) return Monomial::gen(Gen::Beta, 2).pow(-c);
  Monomial r;
  switch (j) {
    case 1:
    case 2:
    case 3:
    case 4: r = Monomial::gen(b_gen(j)) / Monomial::gen(b_gen(j + 1)); break;
    case 5: r = Monomial::gen(Gen::B5) * Monomial::gen(Gen::B6); break;
    case 6: r = Monomial::gen(Gen::B5) / Monomial::gen(Gen::B6); break;
    default: throw Error("gamma index out of range");
  }
  return r.pow(-c);
}

std::vector<CharacterRule> borel_character_relations() {
  std::vector<CharacterRule> out;
  out.push_back({"chi1(h_g7(p^-1))", character_value(7, -1)});
  for (int j = 1; j <= 6; ++j) out.push_back({"chi2(h_g" + std::to_string(j) + "(p^-1))", character_value(j, -1)});
  return out;
}

SatakeCase parse_case(const std::string& s) {
  if (s == "Q0") return SatakeCase::Q0;
  if (s == "Q1") return SatakeCase::Q1;
  if (s == "Q2") return SatakeCase::Q2;
  if (s == "Q3") return SatakeCase::Q3;
  throw UnknownTag("unknown case '" + s + "'");
}

std::string to_string(SatakeCase c) { return "Q" + std::to_string(static_cast<int>(c)); }

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

Equation parse_equation(const std::string& s) {
  auto pos = s.find('=');
  if (pos == std::string::npos) throw Error("equation needs '='");
  return {parse_monomial(s.substr(0, pos)), parse_monomial(s.substr(pos + 1))};
}

namespace {

std::vector<TorusElement> torus_elements(SatakeCase c) {
  auto el = [](std::string label, std::initializer_list<std::pair<int, int>> ks) {
    TorusElement t;
    t.label = std::move(label);
    for (auto [j, k] : ks) t.t_exponent[j - 1] = k;
    return t;
  };
  switch (c) {
    case SatakeCase::Q0:
    case SatakeCase::Q1: return {el("h_g7(p^-1)", {{7, -1}})};
    case SatakeCase::Q2:
      return {el("h_g2(p^-1)", {{2, -1}}),           el("h_g3(p^-1)", {{3, -1}}),
              el("h_g4(p^-1)", {{4, -1}}),           el("h_g6(p^-1)", {{6, -1}}),
              el("h_g1(p^-1)h_g5(p^-1)", {{5, -1}}), el("h_g1(p^-1)h_g7(p^-1)", {{7, -1}})};
    case SatakeCase::Q3:
      return {el("h_g3(p^-1)", {{3, -1}}), el("h_g4(p^-1)", {{4, -1}}), el("h_g6(p^-1)", {{6, -1}}),
              el("h_g1(p^-1)h_g2(p^-2)h_g5(p^-1)h_g6(p)", {{5, -1}, {6, 1}}),
              el("h_g1(p^-1)h_g7(p^-1)", {{7, -1}})};
  }
  return {};
}

}  // namespace

ConstraintSystem build_constraints(SatakeCase c) {
  const auto& G = E7Group::instance();
  const int i = static_cast<int>(c);
  TorusParameterization tp = torus_parameterization(i);
  ExponentFunctional nu = G.nu_exponents(i);
  ExponentFunctional delta_p = G.modulus_exponents(static_cast<ModulusTag>(static_cast<int>(ModulusTag::P_T0) + i));
  ExponentFunctional delta_b1 = G.modulus_exponents(ModulusTag::B1);
  ExponentFunctional delta_b2 = G.modulus_exponents(ModulusTag::B2);

  ConstraintSystem sys;
  sys.which = c;
  sys.elements = torus_elements(c);
  for (const auto& el : sys.elements) {
    std::array<int, 7> gamma_exp{};
    for (std::size_t k = 0; k < tp.params.size(); ++k) {
      int kj = el.t_exponent[tp.params[k] - 1];
      for (int g = 0; g < 7; ++g) gamma_exp[g] += kj * tp.gamma_mult[k][g];
    }
    // (chi_2 delta_B2^{1/2})(h) on the D6 part, (chi_1 delta_B1^{1/2})^{-1} on gamma_7
    Monomial lhs;
    for (int g = 1; g <= 6; ++g) {
      int cg = gamma_exp[g - 1];
      if (cg == 0) continue;
      lhs = lhs * character_value(g, cg) * Monomial::gen(Gen::P, -cg * delta_b2[g - 1] / 2);
    }
    if (int c7 = gamma_exp[6]; c7 != 0)
      lhs = lhs / (character_value(7, c7) * Monomial::gen(Gen::P, -c7 * delta_b1[6] / 2));
    // delta_P^{1/2} omega^2(nu), alpha = omega(p^-1)
    int m = 0, mp = 0;
    for (int j = 0; j < 7; ++j) {
      m += el.t_exponent[j] * nu[j];
      mp += el.t_exponent[j] * delta_p[j];
    }
    if (mp % 2 != 0) throw HalfExponentRejected("odd modulus exponent");
    Monomial rhs = Monomial::gen(Gen::P, -mp / 2) * Monomial::gen(Gen::Alpha, -2 * m);
    sys.equations.push_back({lhs, rhs});
  }
  return sys;
}

namespace {

struct Gf2Result {
  std::optional<std::vector<int>> particular;
  std::vector<std::vector<int>> kernel;
};

// Solve A s = rhs over GF(2).
Gf2Result gf2_solve(std::vector<std::vector<int>> A, std::vector<int> rhs) {
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t q = 0; q < rows; ++q)
      if (q != r && A[q][c]) {
        for (std::size_t k = 0; k < cols; ++k) A[q][k] ^= A[r][k];
        rhs[q] ^= rhs[r];
      }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  Gf2Result out;
  for (std::size_t q = r; q < rows; ++q)
    if (rhs[q]) return out;
  std::vector<int> part(cols, 0);
  for (std::size_t q = 0; q < r; ++q) part[pivot_col[q]] = rhs[q];
  out.particular = part;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) != pivot_col.end()) continue;
    std::vector<int> v(cols, 0);
    v[c] = 1;
    for (std::size_t q = 0; q < r; ++q) v[pivot_col[q]] = A[q][c];
    out.kernel.push_back(v);
  }
  return out;
}

constexpr Gen kKnown[] = {Gen::P, Gen::Alpha, Gen::Beta, Gen::B};

}  // namespace

bool holds_under(const Equation& rel, const std::array<Monomial, 6>& b) {
  Monomial r = rel.ratio();
  for (int i = 1; i <= 6; ++i) r = substitute(r, b_gen(i), b[i - 1]);
  return r.is_one();
}

SatakeSolution solve(const ConstraintSystem& sys) {
  SatakeSolution sol;
  sol.which = sys.which;
  const std::size_t neq = sys.equations.size();
  std::vector<Monomial> known(neq);  // prod b^A = known
  QMatrix A(neq, 6);
  bool any_unknown = false;
  for (std::size_t e = 0; e < neq; ++e) {
    Monomial r = sys.equations[e].ratio();
    for (int u = 1; u <= 6; ++u) {
      int h = r.exponent2(b_gen(u));
      if (h % 2 != 0) throw HalfExponentRejected("half power of an unknown");
      A(e, u - 1) = h / 2;
      if (h) any_unknown = true;
      r.half[static_cast<int>(b_gen(u))] = 0;
    }
    known[e] = r.inverse();
  }
  if (!any_unknown) {
    for (std::size_t e = 0; e < neq; ++e)
      if (!known[e].is_one()) {
        sol.contradiction = sys.equations[e];
        return sol;
      }
    throw InconsistentSystem("no unknowns and no constraint");
  }

  // columns reversed so that elimination prefers the high-index unknowns as pivots
  QMatrix aug(neq, 6 + 4);
  for (std::size_t e = 0; e < neq; ++e) {
    for (int c = 0; c < 6; ++c) aug(e, c) = A(e, 5 - c);
    for (int g = 0; g < 4; ++g) aug(e, 6 + g) = Rational(known[e].exponent2(kKnown[g]), 2);
  }
  auto pivots = rref(aug);
  std::vector<int> pivot_unknown;
  for (std::size_t c : pivots) {
    if (c >= 6) throw InconsistentSystem("exponent system has no solution");
    pivot_unknown.push_back(6 - static_cast<int>(c));
  }
  std::vector<int> free;
  for (int u = 1; u <= 6; ++u)
    if (std::find(pivot_unknown.begin(), pivot_unknown.end(), u) == pivot_unknown.end()) free.push_back(u);
  if (free.size() > 1) throw InconsistentSystem("more than one free unknown");
  if (!free.empty()) {
    sol.free_unknown = free[0];
    sol.b[free[0] - 1] = Monomial::gen(Gen::B);
  }
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    int u = pivot_unknown[row];
    Monomial m;
    for (int g = 0; g < 4; ++g) {
      Rational v = aug(row, 6 + g) * 2;
      if (!is_integer(v)) throw HalfExponentRejected("quarter exponent in solution");
      m.half[static_cast<int>(kKnown[g])] = static_cast<int>(v.get_num().get_si());
    }
    for (int f : free) {
      Rational coef = aug(row, 6 - f);
      if (!is_integer(coef)) throw InconsistentSystem("free unknown enters with a fractional power");
      m = m / sol.b[f - 1].pow(static_cast<int>(coef.get_num().get_si()));
    }
    if (!m.integral()) throw HalfExponentRejected("half exponent in solution for b" + std::to_string(u));
    sol.b[u - 1] = m;
  }

  // sign freedom: A s = sign(known) over GF(2), free unknown pinned to 0
  std::vector<std::vector<int>> A2(neq, std::vector<int>(pivot_unknown.size()));
  std::vector<int> rhs2(neq);
  for (std::size_t e = 0; e < neq; ++e) {
    for (std::size_t k = 0; k < pivot_unknown.size(); ++k) {
      int a = static_cast<int>(A(e, pivot_unknown[k] - 1).get_num().get_si());
      A2[e][k] = ((a % 2) + 2) % 2;
    }
    Monomial current;
    for (int u = 1; u <= 6; ++u) current = current * sol.b[u - 1].pow(static_cast<int>(A(e, u - 1).get_num().get_si()));
    rhs2[e] = (current.sign * known[e].sign) < 0 ? 1 : 0;
  }
  Gf2Result gf = gf2_solve(A2, rhs2);
  if (!gf.particular) throw InconsistentSystem("sign system has no solution");
  if (gf.kernel.size() > 1) throw InconsistentSystem("sign freedom beyond a single eps");
  for (std::size_t k = 0; k < pivot_unknown.size(); ++k) {
    Monomial& bu = sol.b[pivot_unknown[k] - 1];
    if ((*gf.particular)[k]) bu.sign = -bu.sign;
    if (!gf.kernel.empty() && gf.kernel[0][k]) bu.eps ^= 1;
  }
  sol.torsion_rank = static_cast<int>(gf.kernel.size());
  if (neq == pivot_unknown.size()) {
    QMatrix sq(neq, neq);
    for (std::size_t e = 0; e < neq; ++e)
      for (std::size_t k = 0; k < neq; ++k) sq(e, k) = A(e, pivot_unknown[k] - 1);
    Rational d = abs(determinant(sq));
    if (d != Rational(1 << sol.torsion_rank)) throw InconsistentSystem("torsion is not accounted for by signs");
  }
  for (const auto& eq : sys.equations)
    if (!holds_under(eq, sol.b)) throw InconsistentSystem("back substitution fails for " + to_string(eq));
  sol.multiset = gso_embed(sol.b);
  return sol;
}

SatakeSolution solve(SatakeCase c) { return solve(build_constraints(c)); }

Multiset gso_embed(const std::array<Monomial, 6>& b, const Monomial& b0) {
  Multiset m(b.begin(), b.end());
  for (int i = 5; i >= 0; --i) m.push_back(b[i].inverse() * b0);
  return m;
}

namespace {

Monomial p_pow(int k) { return Monomial::gen(Gen::P, k); }
Monomial alpha() { return Monomial::gen(Gen::Alpha); }
Monomial beta() { return Monomial::gen(Gen::Beta); }

}  // namespace

Multiset family_I() {
  Monomial e = Monomial::epsilon(), b = Monomial::gen(Gen::B);
  return gso_embed({e * alpha() * beta(), e * alpha() / beta(), b, b * p_pow(1), b * p_pow(2), b * p_pow(3)});
}

Multiset family_II() {
  Monomial e = Monomial::epsilon();
  std::array<Monomial, 6> v{e * beta() * alpha(), e * beta() / alpha()};
  for (int k = 1; k <= 4; ++k) v[k + 1] = e * beta() / alpha() * p_pow(k);
  return gso_embed(v);
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.terms[LaurentKey{}] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m) {
  if (m.eps) throw Error("specialize eps before expanding");
  LaurentPoly p;
  p.terms[m.half] = m.sign;
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, v] : b.terms) {
    Rational& t = r.terms[k];
    t += v;
    if (t == 0) r.terms.erase(k);
  }
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) {
      LaurentKey k;
      for (int i = 0; i < kGenCount; ++i) k[i] = ka[i] + kb[i];
      Rational& t = r.terms[k];
      t += va * vb;
      if (t == 0) r.terms.erase(k);
    }
  return r;
}

std::string to_string(const LaurentPoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : p.terms) {
    Monomial m;
    m.half = k;
    std::string mono = to_string(m);
    std::string coef = to_string(v);
    if (!out.empty()) out += " + ";
    out += mono == "1" ? coef : (v == 1 ? mono : coef + "*" + mono);
  }
  return out;
}

EulerFactor operator*(const EulerFactor& a, const EulerFactor& b) {
  EulerFactor r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, LaurentPoly{});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
  return r;
}

EulerFactor standard_L_factor(const Multiset& m) {
  EulerFactor f{{LaurentPoly::constant(1)}};
  for (const auto& v : m) {
    LaurentPoly neg = LaurentPoly::monomial(v) * LaurentPoly::constant(-1);
    f = f * EulerFactor{{LaurentPoly::constant(1), neg}};
  }
  return f;
}

namespace {

Multiset zeta_shifts(int from, int to) {
  Multiset m;
  for (int i = from; i <= to; ++i) {
    m.push_back(p_pow(i));
    m.push_back(p_pow(-i));
  }
  return m;
}

Multiset concat(std::initializer_list<Multiset> parts) {
  Multiset out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Multiset specialize(const Multiset& m, int eps, const Monomial& b) {
  Multiset out;
  for (const auto& v : m) out.push_back(substitute(specialize_eps(v, eps), Gen::B, b));
  return out;
}

}  // namespace

IdentityResult verify_degree12_factorization(int eps, const Monomial& b) {
  Multiset values = specialize(family_I(), eps, b);
  EulerFactor lhs = standard_L_factor(values);
  Multiset rs = {alpha() * beta(), alpha() / beta(), beta() / alpha(), (alpha() * beta()).inverse()};
  EulerFactor rhs = standard_L_factor(concat({rs, {Monomial::one(), Monomial::one()}, zeta_shifts(1, 3)}));
  IdentityResult r;
  r.holds = lhs == rhs;
  r.degree = lhs.degree();
  r.detail = "eps=" + std::to_string(eps) + ", b=" + to_string(b) + ", degree " + std::to_string(r.degree);
  return r;
}

IdentityResult verify_eisenstein_specialization(bool also_alpha) {
  Monomial root_p;
  root_p.half[static_cast<int>(Gen::P)] = 1;
  Multiset values;
  for (const auto& v : specialize(family_I(), 1, Monomial::one())) {
    Monomial w = substitute(v, Gen::Beta, root_p);
    if (also_alpha) w = substitute(w, Gen::Alpha, root_p);
    values.push_back(w);
  }
  Multiset degree4;
  if (also_alpha) {
    degree4 = {p_pow(1), Monomial::one(), Monomial::one(), p_pow(-1)};
  } else {
    degree4 = {alpha() * root_p, alpha().inverse() * root_p, alpha() / root_p, (alpha() * root_p).inverse()};
  }
  EulerFactor lhs = standard_L_factor(values);
  EulerFactor rhs = standard_L_factor(concat({degree4, {Monomial::one(), Monomial::one()}, zeta_shifts(1, 3)}));
  IdentityResult r;
  r.holds = lhs == rhs;
  r.degree = lhs.degree();
  r.detail = also_alpha ? "beta, alpha -> p^(1/2)" : "beta -> p^(1/2)";
  return r;
}

Degree56Result verify_degree56_factor() {
  Monomial a = alpha();
  Multiset sym3 = {a.pow(3), a, a.inverse(), a.pow(-3)};
  Multiset std2 = {a, a.inverse(), a, a.inverse()};
  Multiset shifts;
  for (int i = 1; i <= 8; ++i) {
    int copies = i <= 4 ? 2 : 1;
    for (int c = 0; c < copies; ++c)
      for (int s : {1, -1})
        for (int e : {1, -1}) shifts.push_back(a.pow(e) * p_pow(s * i));
  }
  Degree56Result r;
  r.values = concat({sym3, std2, shifts});
  EulerFactor f = standard_L_factor(r.values);
  r.degree = f.degree();
  r.inversion_closed = inversion_closed(r.values);

  const auto& G = E7Group::instance();
  const auto& rep = G.rep();
  std::vector<Root> e6_positive;
  for (const auto& root : G.roots().positive_roots())
    if (root[6] == 0) e6_positive.push_back(root);
  Multiset from_weights;
  for (int k = 0; k < kRepDim; ++k) {
    int twice = 0;
    for (const auto& root : e6_positive) twice += weight_pairing(rep.weights[k], root);
    if (twice % 2 != 0) throw Error("half-integral rho pairing");
    from_weights.push_back(a.pow(3 - 2 * rep.level[k]) * p_pow(twice / 2));
  }
  r.matches_weights = same_multiset(r.values, from_weights);

  Multiset at_one;
  for (const auto& v : r.values) at_one.push_back(substitute(v, Gen::Alpha, Monomial::one()));
  Multiset expect(8, Monomial::one());
  for (int i = 1; i <= 8; ++i)
    for (int c = 0; c < (i <= 4 ? 4 : 2); ++c) expect.push_back(p_pow(i)), expect.push_back(p_pow(-i));
  r.alpha_one_consistent = standard_L_factor(at_one) == standard_L_factor(expect);
  return r;
}

}  // namespace exalg
