#include "exalg/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "exalg/errors.hpp"

namespace exalg {

std::string root_string(const Root& r) {
  bool neg = std::any_of(r.begin(), r.end(), [](int v) { return v < 0; });
  std::string s = neg ? "-" : "";
  for (int v : r) s += static_cast<char>('0' + (neg ? -v : v));
  return s;
}

Root parse_root(const std::string& s) {
  std::string body = s;
  int sign = 1;
  if (!body.empty() && body[0] == '-') {
    sign = -1;
    body = body.substr(1);
  }
  if (body.size() != 7) throw Error("root string must have 7 digits: '" + s + "'");
  Root r{};
  for (int i = 0; i < 7; ++i) {
    if (body[i] < '0' || body[i] > '9') throw Error("bad root string: '" + s + "'");
    r[i] = sign * (body[i] - '0');
  }
  return r;
}

int height(const Root& r) {
  int h = 0;
  for (int v : r) h += v;
  return h;
}

Root operator+(const Root& a, const Root& b) {
  Root r;
  for (int i = 0; i < 7; ++i) r[i] = a[i] + b[i];
  return r;
}

Root operator-(const Root& a, const Root& b) {
  Root r;
  for (int i = 0; i < 7; ++i) r[i] = a[i] - b[i];
  return r;
}

Root operator-(const Root& a) {
  Root r;
  for (int i = 0; i < 7; ++i) r[i] = -a[i];
  return r;
}

Root operator*(int k, const Root& a) {
  Root r;
  for (int i = 0; i < 7; ++i) r[i] = k * a[i];
  return r;
}

namespace {

constexpr CartanMatrix kCartan = {{
    {2, 0, -1, 0, 0, 0, 0},
    {0, 2, 0, -1, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0},
    {0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, 0, -1, 2},
}};

}  // namespace

int pair(const Root& a, const Root& b) {
  int s = 0;
  for (int i = 0; i < 7; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 7; ++j) s += a[i] * kCartan[i][j] * b[j];
  }
  return s;
}

int RootSystemE7::pair(const Root& a, const Root& b) const { return exalg::pair(a, b); }

Root RootSystemE7::simple(int i) {
  if (i < 1 || i > 7) throw Error("simple root index out of range");
  Root r{};
  r[i - 1] = 1;
  return r;
}

Root RootSystemE7::gamma(int k) {
  switch (k) {
    case 1: return {0, 1, 1, 2, 2, 2, 1};
    case 2: return simple(1);
    case 3: return simple(3);
    case 4: return simple(4);
    case 5: return simple(5);
    case 6: return simple(2);
    case 7: return simple(7);
  }
  throw Error("gamma index out of range");
}

std::vector<Root> RootSystemE7::positive_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (height(r) > 0) out.push_back(r);
  return out;
}

int RootSystemE7::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

Root RootSystemE7::highest_root() const { return roots_.back(); }

RootSystemE7 generate() {
  RootSystemE7 rs;
  rs.cartan_ = kCartan;
  std::set<Root> positive;
  std::deque<Root> queue;
  for (int i = 1; i <= 7; ++i) {
    positive.insert(RootSystemE7::simple(i));
    queue.push_back(RootSystemE7::simple(i));
  }
  // queue is processed in height order, so every r - k beta_i is already known
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= 7; ++i) {
      Root b = RootSystemE7::simple(i);
      if (r == b) continue;
      int p = 0;
      Root down = r - b;
      while (positive.count(down)) {
        ++p;
        down = down - b;
      }
      int q = p - pair(r, b);
      if (q > 0) {
        Root up = r + b;
        if (positive.insert(up).second) queue.push_back(up);
      }
    }
  }
  for (const auto& r : positive) {
    rs.roots_.push_back(r);
    rs.roots_.push_back(-r);
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_[rs.roots_[i]] = static_cast<int>(i);
  for (const auto& r : rs.roots_) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int v) { return v >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](int v) { return v <= 0; });
    if (!nonneg && !nonpos) throw ValidationFailure("mixed-sign root " + root_string(r));
  }
  return rs;
}

const RootSystemE7& e7() {
  static const RootSystemE7 rs = generate();
  return rs;
}

std::vector<Root> h_roots(const RootSystemE7& rs) {
  std::vector<Root> out;
  for (const auto& r : rs.roots())
    if (r[5] % 2 == 0) out.push_back(r);
  return out;
}

std::vector<Root> span_roots(const RootSystemE7& rs, const std::vector<Root>& gens) {
  QMatrix g(7, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int i = 0; i < 7; ++i) g(i, j) = gens[j][i];
  if (rank(g) < gens.size()) throw NotIndependent("span_roots needs independent generators");
  std::vector<Root> out;
  for (const auto& r : rs.roots()) {
    QVector v(r.begin(), r.end());
    auto x = solve(g, v);
    if (x && std::all_of(x->begin(), x->end(), [](const Rational& q) { return is_integer(q); }))
      out.push_back(r);
  }
  return out;
}

std::vector<Root> set_X(const RootSystemE7& rs) {
  const Root b7 = RootSystemE7::simple(7);
  std::vector<Root> out;
  for (const auto& r : rs.positive_roots())
    if (rs.pair(r, b7) % 2 != 0) out.push_back(r);
  return out;
}

bool theta_conjugate_parity_odd(const Root& alpha, const std::optional<Root>& mu) {
  const Root b7 = RootSystemE7::simple(7);
  int e = pair(alpha, b7);
  if (mu) e += pair(alpha, *mu) * pair(b7, *mu);
  return e % 2 != 0;
}

std::vector<Root> set_R1(const RootSystemE7& rs, const std::optional<Root>& tag) {
  if (tag) {
    auto X = set_X(rs);
    if (std::find(X.begin(), X.end(), *tag) == X.end())
      throw UnknownTag("n' tag " + root_string(*tag) + " is not in X");
  }
  std::vector<Root> out;
  for (const auto& r : rs.positive_roots())
    if (r[6] > 0 && theta_conjugate_parity_odd(r, tag)) out.push_back(r);
  return out;
}

namespace {

struct Component {
  std::vector<int> nodes;
};

std::string classify_component(const std::vector<std::vector<int>>& A, const QMatrix& gram,
                               const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[nodes[i]] = i;
  std::vector<std::vector<int>> adj(n);
  int edges = 0, double_edges = 0, triple_edges = 0;
  std::pair<int, int> multi{-1, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int prod = A[nodes[i]][nodes[j]] * A[nodes[j]][nodes[i]];
      if (prod == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
      if (prod == 2) ++double_edges, multi = {i, j};
      if (prod == 3) ++triple_edges, multi = {i, j};
    }
  if (edges != n - 1) throw UnrecognizedType("Dynkin graph has a cycle");
  auto tag = [](char c, int r) { return std::string(1, c) + std::to_string(r); };
  if (n == 1) return "A1";
  if (triple_edges) {
    if (n == 2) return "G2";
    throw UnrecognizedType("triple bond in rank > 2");
  }
  int max_deg = 0, branch = -1;
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(adj[i].size()) > max_deg) max_deg = static_cast<int>(adj[i].size()), branch = i;
  if (double_edges) {
    if (double_edges > 1 || max_deg > 2) throw UnrecognizedType("bad non-simply-laced graph");
    if (n == 2) return "B2";
    int short_count = 0;
    Rational longest = 0;
    for (int i = 0; i < n; ++i) longest = std::max(longest, gram(nodes[i], nodes[i]));
    for (int i = 0; i < n; ++i)
      if (gram(nodes[i], nodes[i]) < longest) ++short_count;
    bool end_edge = adj[multi.first].size() == 1 || adj[multi.second].size() == 1;
    if (!end_edge) {
      if (n == 4) return "F4";
      throw UnrecognizedType("double bond in the interior");
    }
    if (short_count == 1) return tag('B', n);
    if (short_count == n - 1) return tag('C', n);
    throw UnrecognizedType("inconsistent root lengths");
  }
  if (max_deg <= 2) return tag('A', n);
  if (max_deg > 3) throw UnrecognizedType("node of degree > 3");
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 0, prev = branch, cur = start;
    while (true) {
      ++len;
      if (adj[cur].size() > 2) throw UnrecognizedType("two branch nodes");
      int next = -1;
      for (int v : adj[cur])
        if (v != prev) next = v;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return tag('D', n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return tag('E', n);
  throw UnrecognizedType("unknown branched diagram");
}

}  // namespace

std::string classify_gram(const QMatrix& gram) {
  const int n = static_cast<int>(gram.rows());
  if (n == 0) return "";
  if (determinant(gram) == 0) throw NotIndependent("simple system is linearly dependent");
  std::vector<std::vector<int>> A(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational a = 2 * gram(i, j) / gram(j, j);
      if (!is_integer(a) || (i != j && a > 0)) throw UnrecognizedType("not a Cartan matrix");
      A[i][j] = static_cast<int>(a.get_num().get_si());
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = A[i][j] * A[j][i];
      if (i != j && (prod < 0 || prod > 3)) throw UnrecognizedType("not a Cartan matrix");
      if (i != j && (A[i][j] == 0) != (A[j][i] == 0)) throw UnrecognizedType("not a Cartan matrix");
    }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comps.emplace_back();
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(comps.size()) - 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && A[v][w] != 0 && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
  }
  std::vector<std::string> types;
  for (auto& c : comps) {
    std::sort(c.begin(), c.end());
    types.push_back(classify_component(A, gram, c));
  }
  std::sort(types.begin(), types.end(), [](const std::string& a, const std::string& b) {
    int ra = std::stoi(a.substr(1)), rb = std::stoi(b.substr(1));
    return ra != rb ? ra > rb : a < b;
  });
  std::string out;
  for (const auto& t : types) out += t;
  return out;
}

std::string classify_subsystem(const RootSystemE7& rs, const std::vector<Root>& simple) {
  QMatrix g(simple.size(), simple.size());
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) g(i, j) = rs.pair(simple[i], simple[j]);
  return classify_gram(g);
}

}  // namespace exalg
