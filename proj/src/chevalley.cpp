#include "exalg/chevalley.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "exalg/errors.hpp"

namespace exalg {

namespace {

int sgn_height(const Root& r) { return height(r) > 0 ? 1 : -1; }

// Bimultiplicative sign on the root lattice.
int fk_sign(const RootSystemE7& rs, const Root& a, const Root& b) {
  int e = 0;
  for (int i = 0; i < 7; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 7; ++j) {
      if (b[j] == 0) continue;
      if (i == j || (i < j && rs.cartan()[i][j] == -1)) e += a[i] * b[j];
    }
  }
  return (e % 2 == 0) ? 1 : -1;
}

int extraspecial_index(const RootSystemE7& rs, const Root& r) {
  for (int i = 1; i <= 7; ++i)
    if (rs.is_root(r - RootSystemE7::simple(i))) return i;
  return -1;
}

}  // namespace

int StructureConstants::at(const RootSystemE7& rs, const Root& a, const Root& b) const {
  int ia = rs.index_of(a), ib = rs.index_of(b);
  if (ia < 0 || ib < 0) throw Error("not a root");
  return (*this)(ia, ib);
}

StructureConstants build_structure_constants(const RootSystemE7& rs) {
  const auto& roots = rs.roots();
  const int n = static_cast<int>(roots.size());
  std::vector<int> fk(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Root s = roots[a] + roots[b];
      if (!rs.is_root(s)) continue;
      // Chevalley basis from the sign function: flip e_{-alpha} for alpha > 0
      fk[a * n + b] = sgn_height(roots[a]) * sgn_height(roots[b]) * sgn_height(s) * fk_sign(rs, roots[a], roots[b]);
    }
  std::vector<int> flip(n, 1);
  for (int k = 0; k < n; ++k) {
    const Root& r = roots[k];
    if (height(r) <= 1) continue;
    int i = extraspecial_index(rs, r);
    int bi = rs.index_of(RootSystemE7::simple(i));
    int d = rs.index_of(r - RootSystemE7::simple(i));
    flip[k] = flip[bi] * flip[d] * fk[bi * n + d];
  }
  for (int k = 0; k < n; ++k)
    if (height(roots[k]) < 0) flip[k] = flip[rs.index_of(-roots[k])];
  StructureConstants sc;
  sc.n_roots = n;
  sc.table.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (fk[a * n + b] == 0) continue;
      int s = rs.index_of(roots[a] + roots[b]);
      sc.table[a * n + b] = flip[a] * flip[b] * flip[s] * fk[a * n + b];
    }
  return sc;
}

namespace {

using SparseLie = std::vector<std::pair<int, int>>;  // (basis index, coefficient)

SparseLie bracket_basis(const RootSystemE7& rs, const StructureConstants& sc, int x, int y) {
  const auto& roots = rs.roots();
  if (x < 7 && y < 7) return {};
  if (x < 7 || y < 7) {
    int hi = x < 7 ? x : y;
    int ri = (x < 7 ? y : x) - 7;
    int c = 0;
    for (int j = 0; j < 7; ++j) c += roots[ri][j] * rs.cartan()[j][hi];
    if (c == 0) return {};
    return {{ri + 7, x < 7 ? c : -c}};
  }
  int a = x - 7, b = y - 7;
  Root s = roots[a] + roots[b];
  if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) {
    SparseLie out;
    for (int i = 0; i < 7; ++i)
      if (roots[a][i] != 0) out.push_back({i, roots[a][i]});
    return out;
  }
  int N = sc(a, b);
  if (N == 0) return {};
  return {{rs.index_of(s) + 7, N}};
}

}  // namespace

StructureConstantReport validate_structure_constants(const RootSystemE7& rs, const StructureConstants& sc) {
  StructureConstantReport rep;
  const auto& roots = rs.roots();
  const int n = sc.n_roots;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int N = sc(a, b);
      bool is_sum = rs.is_root(roots[a] + roots[b]);
      if (is_sum != (N != 0)) rep.string_lengths = false;
      if (!is_sum) continue;
      int p = 0;
      Root d = roots[b] - roots[a];
      while (rs.is_root(d)) ++p, d = d - roots[a];
      if (std::abs(N) != p + 1) rep.string_lengths = false;
      if (sc(b, a) != -N) rep.antisymmetry = false;
      if (sc(rs.index_of(-roots[a]), rs.index_of(-roots[b])) != -N) rep.negation = false;
    }
  for (const auto& r : rs.positive_roots()) {
    if (height(r) <= 1) continue;
    int i = extraspecial_index(rs, r);
    if (sc.at(rs, RootSystemE7::simple(i), r - RootSystemE7::simple(i)) != 1) rep.extraspecial = false;
  }
  const int dim = kAdjointDim;
  std::vector<SparseLie> table(dim * dim);
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) table[x * dim + y] = bracket_basis(rs, sc, x, y);
  std::vector<long> acc(dim, 0);
  for (int x = 0; x < dim && rep.jacobi; ++x)
    for (int y = x + 1; y < dim && rep.jacobi; ++y)
      for (int z = y + 1; z < dim; ++z) {
        std::fill(acc.begin(), acc.end(), 0);
        auto add = [&](int u, int v, int w) {
          for (auto [k, c] : table[v * dim + w])
            for (auto [m, d] : table[u * dim + k]) acc[m] += static_cast<long>(c) * d;
        };
        add(x, y, z);
        add(y, z, x);
        add(z, x, y);
        if (std::any_of(acc.begin(), acc.end(), [](long v) { return v != 0; })) {
          rep.jacobi = false;
          break;
        }
      }
  return rep;
}

int weight_pairing(const Weight& mu, const Root& alpha) {
  int s = 0;
  for (int i = 0; i < 7; ++i) s += mu[i] * alpha[i];
  return s;
}

Weight root_to_weight(const Root& alpha) {
  const auto& C = e7().cartan();
  Weight w{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) w[j] += alpha[i] * C[i][j];
  return w;
}

int Rep56::weight_index(const Weight& w) const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == w) return static_cast<int>(i);
  return -1;
}

QMatrix Rep56::dense(int root_index) const {
  QMatrix m(kRepDim, kRepDim);
  const auto& g = gens[root_index];
  for (int j = 0; j < kRepDim; ++j)
    if (g.row[j] >= 0) m(g.row[j], j) = g.val[j];
  return m;
}

int Rep56::top_index() const {
  for (int i = 0; i < kRepDim; ++i)
    if (level[i] == 0) return i;
  return -1;
}

namespace {

using IntMat = std::vector<int>;  // 56 x 56 row-major

IntMat commutator(const MonomialMap& a, const MonomialMap& b) {
  IntMat m(kRepDim * kRepDim, 0);
  for (int j = 0; j < kRepDim; ++j) {
    int k = b.row[j];
    if (k >= 0 && a.row[k] >= 0) m[a.row[k] * kRepDim + j] += a.val[k] * b.val[j];
    k = a.row[j];
    if (k >= 0 && b.row[k] >= 0) m[b.row[k] * kRepDim + j] -= b.val[k] * a.val[j];
  }
  return m;
}

MonomialMap to_monomial(const IntMat& m, int divisor) {
  MonomialMap out;
  for (int i = 0; i < kRepDim; ++i)
    for (int j = 0; j < kRepDim; ++j) {
      int v = m[i * kRepDim + j];
      if (v == 0) continue;
      if (v % divisor != 0 || out.row[j] >= 0) throw ValidationFailure("bracket is not a signed partial permutation");
      out.row[j] = i;
      out.val[j] = v / divisor;
    }
  return out;
}

IntMat to_int(const MonomialMap& a, int scale) {
  IntMat m(kRepDim * kRepDim, 0);
  for (int j = 0; j < kRepDim; ++j)
    if (a.row[j] >= 0) m[a.row[j] * kRepDim + j] = scale * a.val[j];
  return m;
}

}  // namespace

Rep56 build_rep56(const RootSystemE7& rs, const StructureConstants& sc) {
  const auto& C = rs.cartan();
  Rep56 rep;
  Weight top{0, 0, 0, 0, 0, 0, 1};
  std::set<Weight> seen{top};
  std::deque<Weight> queue{top};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (int i = 0; i < 7; ++i) {
      Weight s = mu;
      for (int j = 0; j < 7; ++j) s[j] -= mu[i] * C[i][j];
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  QMatrix Cq(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) Cq(i, j) = C[i][j];
  QMatrix Cinv = inverse(Cq);
  std::vector<std::pair<int, Weight>> ordered;
  for (const auto& mu : seen) {
    Rational lvl = 0;
    for (int j = 0; j < 7; ++j) lvl += Cinv(6, j) * (top[j] - mu[j]);
    if (!is_integer(lvl)) throw ValidationFailure("weight outside the root lattice coset");
    ordered.push_back({static_cast<int>(lvl.get_num().get_si()), mu});
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  for (auto& [l, mu] : ordered) {
    rep.level.push_back(l);
    rep.weights.push_back(mu);
  }
  if (rep.weights.size() != kRepDim) throw ValidationFailure("orbit of varpi_7 does not have 56 weights");

  const auto& roots = rs.roots();
  const int n = static_cast<int>(roots.size());
  rep.gens.assign(n, MonomialMap{});
  for (int i = 1; i <= 7; ++i) {
    Root b = RootSystemE7::simple(i);
    Weight bw = root_to_weight(b);
    MonomialMap up, down;
    for (int j = 0; j < kRepDim; ++j) {
      const Weight& mu = rep.weights[j];
      int p = weight_pairing(mu, b);
      if (p == -1) {
        Weight t = mu;
        for (int k = 0; k < 7; ++k) t[k] += bw[k];
        up.row[j] = rep.weight_index(t);
        up.val[j] = 1;
      } else if (p == 1) {
        Weight t = mu;
        for (int k = 0; k < 7; ++k) t[k] -= bw[k];
        down.row[j] = rep.weight_index(t);
        down.val[j] = 1;
      }
    }
    rep.gens[rs.index_of(b)] = up;
    rep.gens[rs.index_of(-b)] = down;
  }
  for (const auto& r : rs.positive_roots()) {
    if (height(r) <= 1) continue;
    int i = extraspecial_index(rs, r);
    Root b = RootSystemE7::simple(i);
    Root d = r - b;
    for (int s : {1, -1}) {
      int ib = rs.index_of(s * b), id = rs.index_of(s * d);
      int N = sc(ib, id);
      rep.gens[rs.index_of(s * r)] = to_monomial(commutator(rep.gens[ib], rep.gens[id]), N);
    }
  }

  for (int a = 0; a < n; ++a) {
    const auto& g = rep.gens[a];
    for (int j = 0; j < kRepDim; ++j)
      if (g.row[j] >= 0 && g.row[g.row[j]] >= 0) throw ValidationFailure("rho(e_alpha)^2 != 0");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      IntMat c = commutator(rep.gens[a], rep.gens[b]);
      Root s = roots[a] + roots[b];
      IntMat expect(kRepDim * kRepDim, 0);
      if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) {
        for (int j = 0; j < kRepDim; ++j) expect[j * kRepDim + j] = weight_pairing(rep.weights[j], roots[a]);
      } else if (rs.is_root(s)) {
        expect = to_int(rep.gens[rs.index_of(s)], sc(a, b));
      }
      if (c != expect)
        throw ValidationFailure("bracket relation fails for " + root_string(roots[a]) + ", " + root_string(roots[b]));
    }
  return rep;
}

std::string to_string(ModulusTag t) {
  switch (t) {
    case ModulusTag::Q0: return "Q0";
    case ModulusTag::Q1: return "Q1";
    case ModulusTag::Q2: return "Q2";
    case ModulusTag::Q3: return "Q3";
    case ModulusTag::P_T0: return "P-on-T0";
    case ModulusTag::P_T1: return "P-on-T1";
    case ModulusTag::P_T2: return "P-on-T2";
    case ModulusTag::P_T3: return "P-on-T3";
    case ModulusTag::B1: return "B1";
    case ModulusTag::B2: return "B2";
  }
  return "?";
}

ModulusTag parse_modulus_tag(const std::string& s) {
  for (auto t : {ModulusTag::Q0, ModulusTag::Q1, ModulusTag::Q2, ModulusTag::Q3, ModulusTag::P_T0, ModulusTag::P_T1,
                 ModulusTag::P_T2, ModulusTag::P_T3, ModulusTag::B1, ModulusTag::B2})
    if (to_string(t) == s) return t;
  throw UnknownTag("unknown modulus tag '" + s + "'");
}

std::array<int, 7> TorusParameterization::cocharacter(int j) const {
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (params[k] != j) continue;
    Root v{};
    for (int g = 0; g < 7; ++g)
      if (gamma_mult[k][g] != 0) v = v + gamma_mult[k][g] * RootSystemE7::gamma(g + 1);
    return v;
  }
  throw UnknownTag("torus T" + std::to_string(index) + " has no parameter t" + std::to_string(j));
}

TorusParameterization torus_parameterization(int i) {
  TorusParameterization t;
  t.index = i;
  auto unit = [](int g) {
    std::array<int, 7> m{};
    m[g - 1] = 1;
    return m;
  };
  switch (i) {
    case 0:
    case 1:
      for (int j = 1; j <= 7; ++j) t.params.push_back(j), t.gamma_mult.push_back(unit(j));
      break;
    case 2:
      // h_g1(t5 t7) h_g2(t2) h_g3(t3) h_g4(t4) h_g5(t5) h_g6(t6) h_g7(t7)
      t.params = {2, 3, 4, 5, 6, 7};
      t.gamma_mult = {unit(2), unit(3), unit(4), {1, 0, 0, 0, 1, 0, 0}, unit(6), {1, 0, 0, 0, 0, 0, 1}};
      break;
    case 3:
      // h_g1(t5 t7) h_g2(t5^2) h_g3(t3) h_g4(t4) h_g5(t5) h_g6(t6) h_g7(t7)
      t.params = {3, 4, 5, 6, 7};
      t.gamma_mult = {unit(3), unit(4), {1, 2, 0, 0, 1, 0, 0}, unit(6), {1, 0, 0, 0, 0, 0, 1}};
      break;
    default: throw UnknownTag("no torus T" + std::to_string(i));
  }
  return t;
}

std::string QComputation::table_row() const {
  return levi_type + "T" + std::to_string(torus_rank) + "U" + std::to_string(unipotent_dim);
}

E7Group::E7Group(const RootSystemE7& rs, StructureConstants sc, Rep56 rep)
    : rs_(&rs), sc_(std::move(sc)), rep_(std::move(rep)) {
  // seven weights with independent coordinate vectors
  QMatrix sel(0, 7);
  std::vector<int> rows;
  for (int j = 0; j < kRepDim && rows.size() < 7; ++j) {
    QMatrix trial(rows.size() + 1, 7);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int k = 0; k < 7; ++k) trial(r, k) = rep_.weights[rows[r]][k];
    for (int k = 0; k < 7; ++k) trial(rows.size(), k) = rep_.weights[j][k];
    if (rank(trial) == rows.size() + 1) rows.push_back(j);
  }
  QMatrix W(7, 7);
  for (int r = 0; r < 7; ++r) {
    cartan_rows_[r] = rows[r];
    for (int k = 0; k < 7; ++k) W(r, k) = rep_.weights[rows[r]][k];
  }
  cartan_solver_ = inverse(W);
  const int n = sc_.n_roots;
  killing_root_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int b = rs.index_of(-rs.roots()[a]);
    const auto& A = rep_.gens[a];
    const auto& B = rep_.gens[b];
    int t = 0;
    for (int j = 0; j < kRepDim; ++j)
      if (B.row[j] >= 0 && A.row[B.row[j]] == j) t += A.val[B.row[j]] * B.val[j];
    killing_root_[a] = t;
  }
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      int t = 0;
      for (const auto& mu : rep_.weights) t += mu[i] * mu[j];
      killing_cartan_[i][j] = t;
    }
}

const E7Group& E7Group::instance() {
  static const E7Group G = [] {
    const auto& rs = e7();
    auto sc = build_structure_constants(rs);
    auto rep = build_rep56(rs, sc);
    return E7Group(rs, std::move(sc), std::move(rep));
  }();
  return G;
}

QMatrix E7Group::e(const Root& a) const {
  int i = rs_->index_of(a);
  if (i < 0) throw Error("not a root: " + root_string(a));
  return rep_.dense(i);
}

QMatrix E7Group::h_cartan(int i) const {
  QMatrix m(kRepDim, kRepDim);
  for (int j = 0; j < kRepDim; ++j) m(j, j) = rep_.weights[j][i - 1];
  return m;
}

QMatrix E7Group::basis_matrix(int k) const { return k < 7 ? h_cartan(k + 1) : rep_.dense(k - 7); }

GroupElement56 E7Group::x_alpha(const Root& a, const Rational& c) const {
  QMatrix m = QMatrix::identity(kRepDim);
  const auto& g = rep_.gens[rs_->index_of(a)];
  for (int j = 0; j < kRepDim; ++j)
    if (g.row[j] >= 0) m(g.row[j], j) += c * g.val[j];
  return m;
}

GroupElement56 E7Group::n_alpha(const Root& a) const {
  return x_alpha(a, 1) * x_alpha(-a, -1) * x_alpha(a, 1);
}

GroupElement56 E7Group::n_alpha_inv(const Root& a) const {
  return x_alpha(a, -1) * x_alpha(-a, 1) * x_alpha(a, -1);
}

GroupElement56 E7Group::h_alpha(const Root& a, const Rational& c) const {
  if (c == 0) throw ZeroScalar("h_alpha needs a nonzero scalar");
  return x_alpha(a, c) * x_alpha(-a, -1 / c) * x_alpha(a, c) * n_alpha_inv(a);
}

GroupElement56 E7Group::y_alpha(const Root& a) const {
  return x_alpha(a, 1) * n_alpha(a) * x_alpha(a, Rational(1, 2));
}

GroupElement56 E7Group::theta() const { return h_alpha(RootSystemE7::simple(7), -1); }

CosetReps E7Group::coset_reps() const {
  const Root b6 = RootSystemE7::simple(6), b7 = RootSystemE7::simple(7), g1 = RootSystemE7::gamma(1);
  CosetReps c;
  c.n = n_alpha(b6 + b7);
  c.g0 = QMatrix::identity(kRepDim);
  c.g1 = c.n;
  c.g2 = y_alpha(b7) * c.n;
  c.g3 = y_alpha(g1) * c.g2;
  c.g_prime = h_alpha(b6, -1) * n_alpha(b7) * n_alpha(g1);
  return c;
}

QVector E7Group::to_adjoint(const QMatrix& X) const {
  QVector v(kAdjointDim);
  QMatrix recon(kRepDim, kRepDim);
  for (int a = 0; a < sc_.n_roots; ++a) {
    const auto& g = rep_.gens[a];
    for (int j = 0; j < kRepDim; ++j)
      if (g.row[j] >= 0) {
        v[7 + a] = X(g.row[j], j) / g.val[j];
        break;
      }
    if (v[7 + a] != 0)
      for (int j = 0; j < kRepDim; ++j)
        if (g.row[j] >= 0) recon(g.row[j], j) += v[7 + a] * g.val[j];
  }
  for (int i = 0; i < 7; ++i)
    for (int r = 0; r < 7; ++r) v[i] += cartan_solver_(i, r) * X(cartan_rows_[r], cartan_rows_[r]);
  for (int j = 0; j < kRepDim; ++j)
    for (int i = 0; i < 7; ++i) recon(j, j) += v[i] * rep_.weights[j][i];
  if (recon != X) throw DecompositionFailure("matrix is not in the image of the Lie algebra");
  return v;
}

QMatrix E7Group::from_adjoint(const QVector& v) const {
  QMatrix m(kRepDim, kRepDim);
  for (int j = 0; j < kRepDim; ++j)
    for (int i = 0; i < 7; ++i) m(j, j) += v[i] * rep_.weights[j][i];
  for (int a = 0; a < sc_.n_roots; ++a) {
    if (v[7 + a] == 0) continue;
    const auto& g = rep_.gens[a];
    for (int j = 0; j < kRepDim; ++j)
      if (g.row[j] >= 0) m(g.row[j], j) += v[7 + a] * g.val[j];
  }
  return m;
}

QVector E7Group::conjugate_basis(const GroupElement56& g, const GroupElement56& g_inv, int k) const {
  // entry (r, c) of g X g^{-1}
  auto entry = [&](int r, int c) {
    Rational s = 0;
    if (k < 7) {
      for (int b = 0; b < kRepDim; ++b) {
        int w = rep_.weights[b][k];
        if (w == 0 || sgn(g(r, b)) == 0 || sgn(g_inv(b, c)) == 0) continue;
        s += w * g(r, b) * g_inv(b, c);
      }
    } else {
      const auto& X = rep_.gens[k - 7];
      for (int b = 0; b < kRepDim; ++b) {
        if (X.row[b] < 0) continue;
        const Rational& left = g(r, X.row[b]);
        if (sgn(left) == 0 || sgn(g_inv(b, c)) == 0) continue;
        s += X.val[b] * left * g_inv(b, c);
      }
    }
    return s;
  };
  QVector v(kAdjointDim);
  for (int a = 0; a < sc_.n_roots; ++a) {
    const auto& G = rep_.gens[a];
    for (int j = 0; j < kRepDim; ++j)
      if (G.row[j] >= 0) {
        v[7 + a] = entry(G.row[j], j) / G.val[j];
        break;
      }
  }
  for (int i = 0; i < 7; ++i)
    for (int r = 0; r < 7; ++r) {
      if (sgn(cartan_solver_(i, r)) == 0) continue;
      v[i] += cartan_solver_(i, r) * entry(cartan_rows_[r], cartan_rows_[r]);
    }
  return v;
}

Rational E7Group::trace_form(const QVector& u, const QVector& v) const {
  Rational s = 0;
  for (int i = 0; i < 7; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < 7; ++j)
      if (v[j] != 0) s += u[i] * killing_cartan_[i][j] * v[j];
  }
  for (int a = 0; a < sc_.n_roots; ++a) {
    if (u[7 + a] == 0) continue;
    int b = rs_->index_of(-rs_->roots()[a]);
    if (v[7 + b] != 0) s += u[7 + a] * v[7 + b] * killing_root_[a];
  }
  return s;
}

namespace {

std::vector<std::vector<bool>> reachability(const Rep56& rep, const std::vector<int>& gens, bool include_identity) {
  std::vector<std::vector<bool>> reach(kRepDim, std::vector<bool>(kRepDim, false));
  for (int j = 0; j < kRepDim; ++j) {
    std::vector<int> stack{j};
    std::vector<bool> seen(kRepDim, false);
    seen[j] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a : gens) {
        int w = rep.gens[a].row[v];
        if (w >= 0 && !seen[w]) seen[w] = true, stack.push_back(w);
      }
    }
    for (int i = 0; i < kRepDim; ++i) reach[i][j] = seen[i] && (include_identity || i != j);
  }
  return reach;
}

}  // namespace

std::vector<std::pair<int, int>> E7Group::parabolic_zero_pattern() const {
  std::vector<int> p_gens, u_minus;
  for (int a = 0; a < sc_.n_roots; ++a) {
    int a7 = rs_->roots()[a][6];
    if (a7 >= 0) p_gens.push_back(a);
    if (a7 == -1) u_minus.push_back(a);
  }
  auto on_P = reachability(rep_, p_gens, true);
  auto on_U = reachability(rep_, u_minus, false);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < kRepDim; ++i)
    for (int j = 0; j < kRepDim; ++j)
      if (!on_P[i][j] && on_U[i][j]) out.push_back({i, j});
  return out;
}

std::size_t E7Group::identically_vanishing_count() const {
  std::vector<int> p_gens;
  for (int a = 0; a < sc_.n_roots; ++a)
    if (rs_->roots()[a][6] >= 0) p_gens.push_back(a);
  auto on_P = reachability(rep_, p_gens, true);
  std::size_t n = 0;
  for (int i = 0; i < kRepDim; ++i)
    for (int j = 0; j < kRepDim; ++j)
      if (!on_P[i][j]) ++n;
  return n;
}

bool E7Group::is_in_P(const GroupElement56& g) const {
  static const auto pattern = parabolic_zero_pattern();
  for (auto [i, j] : pattern)
    if (g(i, j) != 0) return false;
  return true;
}

QMatrix E7Group::stabilizer_algebra(const GroupElement56& g) const {
  GroupElement56 g_inv = inverse(g);
  std::vector<int> p_basis;
  for (int k = 0; k < 7; ++k) p_basis.push_back(k);
  for (int a = 0; a < sc_.n_roots; ++a)
    if (rs_->roots()[a][6] >= 0) p_basis.push_back(7 + a);
  std::vector<QVector> cols;
  for (int k : p_basis) cols.push_back(conjugate_basis(g_inv, g, k));
  QMatrix M = QMatrix::from_columns(cols, kAdjointDim);
  std::vector<int> non_h;
  for (int a = 0; a < sc_.n_roots; ++a)
    if (rs_->roots()[a][5] % 2 != 0) non_h.push_back(7 + a);
  QMatrix R(non_h.size(), M.cols());
  for (std::size_t r = 0; r < non_h.size(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) R(r, c) = M(non_h[r], c);
  QMatrix ker = nullspace(R);
  return M * ker;
}

namespace {

QMatrix select_rows(const QMatrix& m, const std::vector<int>& rows) {
  QMatrix out(rows.size(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(rows[r], c);
  return out;
}

bool lex_positive(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

QComputation E7Group::compute_Q(int i) const {
  if (i < 0 || i > 3) throw UnknownTag("Q index must be 0..3");
  const auto& roots = rs_->roots();
  const int nr = sc_.n_roots;
  CosetReps reps = coset_reps();
  const GroupElement56* gs[] = {&reps.g0, &reps.g1, &reps.g2, &reps.g3};
  QComputation q;
  q.index = i;
  q.q_basis = stabilizer_algebra(*gs[i]);
  const std::size_t d = q.q_basis.cols();
  q.dim = d;

  std::vector<QVector> qcols;
  for (std::size_t c = 0; c < d; ++c) qcols.push_back(q.q_basis.column(c));
  QMatrix gram(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) gram(a, b) = gram(b, a) = trace_form(qcols[a], qcols[b]);
  q.n_basis = q.q_basis * nullspace(gram);
  q.unipotent_dim = q.n_basis.cols();

  std::vector<int> root_rows;
  for (int a = 0; a < nr; ++a) root_rows.push_back(7 + a);
  QMatrix tker = nullspace(select_rows(q.q_basis, root_rows));
  QMatrix tfull = q.q_basis * tker;
  q.t_basis = select_rows(tfull, {0, 1, 2, 3, 4, 5, 6});
  const std::size_t r = q.t_basis.cols();
  q.torus_dim = r;

  auto restrict_root = [&](const Root& a) {
    QVector lam(r);
    Weight w = root_to_weight(a);
    for (std::size_t k = 0; k < r; ++k)
      for (int j = 0; j < 7; ++j) lam[k] += q.t_basis(j, k) * w[j];
    return lam;
  };
  std::map<QVector, std::vector<int>> groups;
  for (int a = 0; a < nr; ++a) groups[restrict_root(roots[a])].push_back(7 + a);
  QVector zero(r);
  for (int k = 0; k < 7; ++k) groups[zero].push_back(k);

  std::size_t q_total = 0, n_total = 0;
  std::vector<QVector> levi;
  std::map<QVector, std::vector<Root>> levi_support;
  for (const auto& [lam, rows] : groups) {
    QMatrix qp = select_rows(q.q_basis, rows);
    QMatrix np = select_rows(q.n_basis, rows);
    std::size_t dq = rank(qp), dn = q.unipotent_dim ? rank(np) : 0;
    q_total += dq;
    n_total += dn;
    if (lam == zero) {
      if (dq - dn != r) throw DecompositionFailure("torus is not a Cartan subalgebra of the Levi factor");
    } else if (dq - dn > 1) {
      throw DecompositionFailure("Levi root of multiplicity > 1");
    } else if (dq - dn == 1) {
      levi.push_back(lam);
      for (int row : rows) levi_support[lam].push_back(roots[row - 7]);
    }
    if (dn > 0) {
      for (int row : rows) {
        if (row < 7) continue;
        QMatrix aug(rows.size(), np.cols() + 1);
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
          for (std::size_t c = 0; c < np.cols(); ++c) aug(rr, c) = np(rr, c);
          aug(rr, np.cols()) = rows[rr] == row ? 1 : 0;
        }
        if (rank(aug) == dn) q.nilradical_roots.push_back(roots[row - 7]);
      }
    }
  }
  if (q_total != d || n_total != q.unipotent_dim)
    throw DecompositionFailure("subalgebra is not a sum of torus weight spaces");
  q.nilradical_spanned_by_roots = q.nilradical_roots.size() == q.unipotent_dim;
  std::sort(q.nilradical_roots.begin(), q.nilradical_roots.end(), [&](const Root& a, const Root& b) {
    return rs_->index_of(a) < rs_->index_of(b);
  });

  q.levi_root_count = levi.size();
  QMatrix Cq(7, 7);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) Cq(a, b) = rs_->cartan()[a][b];
  QMatrix Gt = q.t_basis.transpose() * Cq * q.t_basis;
  std::vector<QVector> simple;
  if (!levi.empty()) {
    QMatrix Gti = inverse(Gt);
    std::set<QVector> pos;
    for (const auto& l : levi)
      if (lex_positive(l)) pos.insert(l);
    for (const auto& l : pos) {
      bool decomposable = false;
      for (const auto& m : pos) {
        QVector diff(r);
        for (std::size_t k = 0; k < r; ++k) diff[k] = l[k] - m[k];
        if (pos.count(diff)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) simple.push_back(l);
    }
    QMatrix sg(simple.size(), simple.size());
    for (std::size_t a = 0; a < simple.size(); ++a)
      for (std::size_t b = 0; b < simple.size(); ++b) {
        QVector t = Gti * simple[b];
        Rational s = 0;
        for (std::size_t k = 0; k < r; ++k) s += simple[a][k] * t[k];
        sg(a, b) = s;
      }
    q.levi_type = classify_gram(sg);
  }
  q.semisimple_rank = simple.size();
  q.torus_rank = static_cast<int>(r - simple.size());
  if (q.torus_dim + q.levi_root_count + q.unipotent_dim != q.dim)
    throw DecompositionFailure("Levi plus nilradical does not fill the subalgebra");

  if (i == 3) {
    const GroupElement56& g = *gs[i];
    GroupElement56 g_inv = inverse(g);
    std::map<int, QVector> ad_cache;
    std::set<int> support;
    for (std::size_t c = 0; c < q.unipotent_dim; ++c) {
      QVector acc(kAdjointDim);
      for (int k = 0; k < kAdjointDim; ++k) {
        const Rational& coef = q.n_basis(k, c);
        if (coef == 0) continue;
        auto it = ad_cache.find(k);
        if (it == ad_cache.end()) it = ad_cache.emplace(k, conjugate_basis(g, g_inv, k)).first;
        for (int m = 0; m < kAdjointDim; ++m)
          if (it->second[m] != 0) acc[m] += coef * it->second[m];
      }
      for (int a = 0; a < nr; ++a)
        if (acc[7 + a] != 0) support.insert(a);
    }
    std::set<int> paired;
    for (int a : support) {
      const Root& alpha = roots[a];
      if (alpha[6] != 0) continue;
      Root image = act_on_root(reps.g_prime, alpha);
      q.diagonal_pairs.push_back({alpha, image});
      paired.insert(a);
      paired.insert(rs_->index_of(image));
    }
    for (int a : support) {
      q.conjugated_support.push_back(roots[a]);
      if (!paired.count(a)) q.fixed_roots.push_back(roots[a]);
    }
  }
  return q;
}

Root E7Group::act_on_root(const GroupElement56& g, const Root& a) const {
  GroupElement56 g_inv = inverse(g);
  QVector v = conjugate_basis(g, g_inv, 7 + rs_->index_of(a));
  int hit = -1;
  for (int k = 0; k < kAdjointDim; ++k) {
    if (v[k] == 0) continue;
    if (k < 7 || hit >= 0) throw DecompositionFailure("element does not permute root spaces");
    hit = k - 7;
  }
  if (hit < 0) throw DecompositionFailure("zero image");
  return rs_->roots()[hit];
}

ExponentFunctional E7Group::nu_exponents(int i) const {
  CosetReps reps = coset_reps();
  const GroupElement56* gs[] = {&reps.g0, &reps.g1, &reps.g2, &reps.g3};
  GroupElement56 g_inv = inverse(*gs[i]);
  TorusParameterization tp = torus_parameterization(i);
  const int top = rep_.top_index();
  std::optional<ExponentFunctional> nu;
  for (int m = 0; m < kRepDim; ++m) {
    if (g_inv(m, top) == 0) continue;
    ExponentFunctional e{};
    for (int j : tp.params) e[j - 1] = weight_pairing(rep_.weights[m], tp.cocharacter(j));
    if (nu && *nu != e) throw DecompositionFailure("g^{-1} v_top is not a torus eigenvector");
    nu = e;
  }
  return *nu;
}

namespace {

void check_torus(const QComputation& q, const TorusParameterization& tp) {
  QMatrix cochar(7, tp.params.size());
  for (std::size_t k = 0; k < tp.params.size(); ++k) {
    auto v = tp.cocharacter(tp.params[k]);
    for (int j = 0; j < 7; ++j) cochar(j, k) = v[j];
  }
  if (rank(cochar) != q.torus_dim || joint_rank(cochar, q.t_basis) != q.torus_dim)
    throw DecompositionFailure("torus parameterization does not match the computed torus");
}

}  // namespace

ExponentFunctional E7Group::modulus_exponents(ModulusTag tag, const QComputation& q) const {
  TorusParameterization tp = torus_parameterization(q.index);
  check_torus(q, tp);
  ExponentFunctional e{};
  // weights of the nilradical, with multiplicity, from its projection to root coordinates
  std::map<QVector, std::vector<int>> groups;
  const auto& roots = rs_->roots();
  for (int a = 0; a < sc_.n_roots; ++a) {
    QVector lam;
    for (int j : tp.params) lam.push_back(pair(roots[a], tp.cocharacter(j)));
    groups[lam].push_back(7 + a);
  }
  for (const auto& [lam, rows] : groups) {
    std::size_t dn = rank(select_rows(q.n_basis, rows));
    for (std::size_t k = 0; k < tp.params.size(); ++k) {
      Rational v = lam[k] * static_cast<long>(dn);
      e[tp.params[k] - 1] += static_cast<int>(v.get_num().get_si());
    }
  }
  (void)tag;
  return e;
}

ExponentFunctional E7Group::modulus_exponents(ModulusTag tag) const {
  switch (tag) {
    case ModulusTag::Q0:
    case ModulusTag::Q1:
    case ModulusTag::Q2:
    case ModulusTag::Q3: {
      int i = static_cast<int>(tag) - static_cast<int>(ModulusTag::Q0);
      return modulus_exponents(tag, compute_Q(i));
    }
    case ModulusTag::P_T0:
    case ModulusTag::P_T1:
    case ModulusTag::P_T2:
    case ModulusTag::P_T3: {
      int i = static_cast<int>(tag) - static_cast<int>(ModulusTag::P_T0);
      ExponentFunctional e = nu_exponents(i);
      for (auto& v : e) v *= 18;
      return e;
    }
    case ModulusTag::B1:
    case ModulusTag::B2: {
      TorusParameterization tp = torus_parameterization(0);
      std::vector<Root> positive;
      if (tag == ModulusTag::B1) {
        positive.push_back(RootSystemE7::gamma(7));
      } else {
        QMatrix g(7, 6);
        for (int k = 0; k < 6; ++k)
          for (int j = 0; j < 7; ++j) g(j, k) = RootSystemE7::gamma(k + 1)[j];
        for (const auto& r : rs_->roots()) {
          auto x = solve(g, QVector(r.begin(), r.end()));
          if (x && std::all_of(x->begin(), x->end(), [](const Rational& c) { return is_integer(c) && c >= 0; }))
            positive.push_back(r);
        }
      }
      ExponentFunctional e{};
      for (const auto& a : positive)
        for (int j : tp.params) e[j - 1] += pair(a, tp.cocharacter(j));
      return e;
    }
  }
  throw UnknownTag("unknown modulus tag");
}

std::vector<Root> E7Group::theta_fixed_roots() const {
  GroupElement56 th = theta();
  std::vector<Root> out;
  for (int a = 0; a < sc_.n_roots; ++a) {
    const auto& G = rep_.gens[a];
    for (int j = 0; j < kRepDim; ++j)
      if (G.row[j] >= 0) {
        if (th(G.row[j], G.row[j]) == th(j, j)) out.push_back(rs_->roots()[a]);
        break;
      }
  }
  return out;
}

std::vector<IdentityCheck> E7Group::verify_coset_identities() const {
  std::vector<IdentityCheck> out;
  const Root b2 = RootSystemE7::simple(2), b6 = RootSystemE7::simple(6), b7 = RootSystemE7::simple(7);
  const Root g1 = RootSystemE7::gamma(1), g3 = RootSystemE7::gamma(3), g6 = RootSystemE7::gamma(6);
  (void)b2;
  CosetReps reps = coset_reps();
  GroupElement56 n6 = n_alpha(b6), n6i = n_alpha_inv(b6), n7 = n_alpha(b7), n7i = n_alpha_inv(b7);
  GroupElement56 y7 = y_alpha(b7);

  out.push_back({"y_0000011 = n6 y7 n6^-1", y_alpha(b6 + b7) == n6 * y7 * n6i, ""});

  GroupElement56 conj = n7 * n6 * n7i;
  bool holds = reps.n == conj;
  std::string detail = std::string("n7 n6 n7^-1 = n^-1: ") + (conj == n_alpha_inv(b6 + b7) ? "yes" : "no") +
                       "; n = n7^-1 n6 n7: " + (reps.n == n7i * n6 * n7 ? "yes" : "no");
  out.push_back({"n = n7 n6 n7^-1", holds, detail});

  QMatrix qa = stabilizer_algebra(y7 * reps.n * n6);
  QMatrix qb = stabilizer_algebra(y7 * reps.n);
  bool same = qa.cols() == qb.cols() && joint_rank(qa, qb) == qa.cols();
  out.push_back({"Q_{y7 n n6} = Q_{y7 n}", same,
                 "dims " + std::to_string(qa.cols()) + ", " + std::to_string(qb.cols())});

  GroupElement56 th = theta();
  bool parity_ok = true;
  std::vector<std::optional<Root>> tags{std::nullopt};
  for (const auto& mu : set_X(*rs_)) tags.push_back(mu);
  for (const auto& tag : tags) {
    GroupElement56 t = tag ? n_alpha(*tag) * th * n_alpha_inv(*tag) : th;
    for (const auto& a : rs_->positive_roots()) {
      const auto& G = rep_.gens[rs_->index_of(a)];
      for (int j = 0; j < kRepDim; ++j)
        if (G.row[j] >= 0) {
          Rational ratio = t(G.row[j], G.row[j]) / t(j, j);
          bool odd = ratio == -1;
          if (odd != theta_conjugate_parity_odd(a, tag)) parity_ok = false;
          break;
        }
    }
    for (int r = 0; r < kRepDim; ++r)
      for (int c = 0; c < kRepDim; ++c)
        if (r != c && t(r, c) != 0) parity_ok = false;
  }
  out.push_back({"theta-conjugation parity rule", parity_ok, "n' = 1 and n_mu for all 32 mu in X"});

  out.push_back({"g3 theta g3^-1 = g'", reps.g3 * th * inverse(reps.g3) == reps.g_prime, ""});
  out.push_back({"theta^2 = 1", (th * th).is_identity(), ""});
  out.push_back({"h_g1(-1) h_g3(-1) h_g6(-1) = h_b7(-1)",
                 h_alpha(g1, -1) * h_alpha(g3, -1) * h_alpha(g6, -1) == th, ""});
  return out;
}

}  // namespace exalg
