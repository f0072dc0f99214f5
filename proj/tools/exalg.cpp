#include <cstdlib>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exalg/cache.hpp"
#include "exalg/errors.hpp"
#include "exalg/jordan.hpp"
#include "exalg/modforms.hpp"
#include "exalg/octonion.hpp"
#include "exalg/reference.hpp"
#include "exalg/satake.hpp"
#include "exalg/suites.hpp"

using namespace exalg;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitEnv = 2;

// Rationals travel as "p/q" strings; plain integers are accepted on input.
Rational rational_of(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected a rational, got " + j.dump());
}

json to_json(const Octonion& x) {
  json a = json::array();
  for (const auto& c : x.c) a.push_back(to_string(c));
  return a;
}

Octonion octonion_of(const json& j) {
  if (!j.is_array() || j.size() != 8) throw Error("octonion needs 8 coordinates");
  Octonion x;
  for (int i = 0; i < 8; ++i) x.c[i] = rational_of(j[i]);
  return x;
}

json to_json(const Complex& z) { return {{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

json to_json(const Jordan2& X) { return {{"a", to_string(X.a)}, {"b", to_string(X.b)}, {"x", to_json(X.x)}}; }

Jordan2 jordan2_of(const json& j) {
  return {rational_of(j.at("a")), rational_of(j.at("b")), j.contains("x") ? octonion_of(j["x"]) : Octonion{}};
}

Jordan3 jordan3_of(const json& j) {
  auto oct = [&](const char* k) { return j.contains(k) ? octonion_of(j[k]) : Octonion{}; };
  Jordan3 X;
  X.a = rational_of(j.at("a"));
  X.b = rational_of(j.at("b"));
  X.c = rational_of(j.at("c"));
  X.x = oct("x");
  X.y = oct("y");
  X.z = oct("z");
  return X;
}

TubePoint2 point_of(const json& j) { return TubePoint2(jordan2_of(j.at("re")), jordan2_of(j.at("im"))); }

json to_json(const TubePoint2& Z) { return {{"re", to_json(Z.re)}, {"im", to_json(Z.im)}}; }

// ["iota", {"translate": J2}, "weyl", {"unipotent": [8 coords]}]
GammaWord word_of(const json& j) {
  GammaWord w;
  for (const auto& t : j) {
    if (t == "iota")
      w.push(InversionGen{});
    else if (t == "weyl")
      w.push(RotateGen{RotateGen::Kind::Weyl, Octonion{}});
    else if (t.is_object() && t.contains("translate"))
      w.push(TranslateGen{jordan2_of(t["translate"])});
    else if (t.is_object() && t.contains("unipotent"))
      w.push(RotateGen{RotateGen::Kind::Unipotent, octonion_of(t["unipotent"])});
    else
      throw InvalidGenerator("unknown generator " + t.dump());
  }
  return w;
}

json to_json(const Monomial& m) {
  json e = json::object();
  for (int g = 0; g < kGenCount; ++g) {
    if (m.half[g] == 0) continue;
    Rational r(m.half[g], 2);
    r.canonicalize();
    e[gen_name(static_cast<Gen>(g))] = to_string(r);
  }
  return {{"text", to_string(m)}, {"sign", m.sign}, {"eps", m.eps}, {"exponents", e}};
}

json to_json(const Multiset& ms) {
  json a = json::array();
  for (const auto& m : sorted(ms)) a.push_back(to_json(m));
  return a;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [key, c] : p.terms) {
    Monomial m;
    m.half = key;
    terms.push_back({{"monomial", to_json(m)["exponents"]}, {"coeff", to_string(c)}});
  }
  return {{"text", to_string(p)}, {"terms", terms}};
}

json to_json(const Equation& e) { return {{"text", to_string(e)}, {"lhs", to_json(e.lhs)}, {"rhs", to_json(e.rhs)}}; }

json to_json(const QSeries& f) {
  json c = json::array();
  for (const auto& x : f.coeffs) c.push_back(to_string(x));
  return {{"weight", f.weight}, {"order", f.order()}, {"coeffs", c}};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string cache_dir_opt;
std::filesystem::path cache_dir() { return cache_dir_opt.empty() ? default_cache_dir() : std::filesystem::path(cache_dir_opt); }

int cmd_verify(const std::string& suite, bool as_json) {
  E7Group G = load_group(cache_dir());
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {suite};
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [&G, n] { return run_suite(n, G); }));
  std::vector<SuiteReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  bool ok = true;
  json all = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (as_json)
      all.push_back(exalg::to_json(r));
    else
      std::cout << to_text(r);
  }
  if (as_json) print(names.size() == 1 ? all[0] : json{{"ok", ok}, {"suites", all}});
  return ok ? 0 : kExitFail;
}

json cache_json(const CacheInfo& c) {
  return {{"path", c.path.string()},
          {"convention_version", c.convention_version},
          {"root_order_hash", c.root_order_hash},
          {"content_hash", c.content_hash},
          {"bytes", c.bytes}};
}

int cmd_coset_table1() {
  E7Group G = load_group(cache_dir());
  json rows = dump_target("table1", G);
  bool ok = true;
  std::cout << "rep  computed      printed\n";
  for (int i = 0; i < 4; ++i) {
    const auto& r = rows[i];
    std::string row = r["levi"].get<std::string>() + "T" + std::to_string(r["torus"].get<int>()) + "U" +
                      std::to_string(r["unipotent"].get<int>());
    std::string printed(expected::kLeviTable[i]);
    bool same = row == printed;
    ok = ok && same;
    std::cout << "g" << i << "   " << row << std::string(row.size() < 14 ? 14 - row.size() : 1, ' ') << printed
              << (same ? "" : "   differs") << "\n";
  }
  return ok ? 0 : kExitFail;
}

int cmd_satake_solve(const std::string& which) {
  SatakeCase c = parse_case(which);
  ConstraintSystem sys = build_constraints(c);
  SatakeSolution s = solve(sys);
  json eqs = json::array();
  for (const auto& e : sys.equations) eqs.push_back(to_json(e));
  json out{{"case", to_string(c)}, {"equations", eqs}};
  if (s.contradiction) {
    out["contradiction"] = to_json(*s.contradiction);
  } else {
    json b = json::array();
    for (const auto& m : s.b) b.push_back(to_json(m));
    out["b"] = b;
    out["free_unknown"] = s.free_unknown;
    out["torsion_rank"] = s.torsion_rank;
    out["multiset"] = to_json(s.multiset);
  }
  print(out);
  return 0;
}

int cmd_satake_euler(const std::string& family, int eps, const std::string& b, bool check) {
  if (eps != 1 && eps != -1) throw Error("--epsilon must be 1 or -1");
  Multiset ms;
  if (family == "I") {
    Monomial bv = parse_monomial(b);
    for (const auto& m : family_I()) ms.push_back(substitute(m, Gen::B, bv));
  } else if (family == "II") {
    ms = family_II();
  } else {
    throw UnknownTag("unknown family '" + family + "'");
  }
  for (auto& m : ms) m = specialize_eps(m, eps);
  EulerFactor f = standard_L_factor(ms);
  json coeffs = json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
  json out{{"family", family}, {"epsilon", eps}, {"multiset", to_json(ms)}, {"degree", f.degree()}, {"coeffs", coeffs}};
  int rc = 0;
  if (check) {
    if (family != "I") throw Error("--check-theorem applies to family I");
    IdentityResult r = verify_degree12_factorization(eps, parse_monomial(b));
    out["identity"] = {{"holds", r.holds}, {"detail", r.detail}};
    rc = r.holds ? 0 : kExitFail;
  }
  print(out);
  return rc;
}

QSeries series(const std::string& kind, int weight, std::size_t order) {
  if (kind == "delta") return delta_q(order);
  if (kind == "eisenstein") return eisenstein_q(weight, order);
  if (kind == "cusp") return cusp_generator(weight, order);
  throw UnknownTag("unknown series '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for octonions, E7 and its Satake parameters"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache-dir", cache_dir_opt, "Cache directory")->envname("EXALG_CACHE_DIR");

  std::string suite = "all";
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember([] {
    auto s = suite_names();
    s.push_back("all");
    return s;
  }()));
  verify->add_flag("--json", as_json);

  std::string target;
  auto* dump = app.add_subcommand("dump", "Print a computed table as JSON");
  dump->add_option("--target,target", target)->required()->check(CLI::IsMember(dump_targets()));

  auto* cache = app.add_subcommand("cache", "Manage the structure-constant cache");
  cache->require_subcommand(1);
  auto* cache_build_cmd = cache->add_subcommand("build");
  auto* cache_clean_cmd = cache->add_subcommand("clean");
  auto* cache_info_cmd = cache->add_subcommand("info");

  auto* octo = app.add_subcommand("octonion", "Octonion tables");
  octo->require_subcommand(1);
  auto* octo_table = octo->add_subcommand("table", "Multiplication table as {sign, index}");
  std::string mul_x, mul_y;
  auto* octo_mul = octo->add_subcommand("mul", "Product of two octonions, each a JSON array of 8 rationals");
  octo_mul->add_option("x", mul_x)->required();
  octo_mul->add_option("y", mul_y)->required();

  auto* jordan = app.add_subcommand("jordan", "Jordan algebra evaluations");
  jordan->require_subcommand(1);
  std::string matrix, word, point;
  auto* jdet = jordan->add_subcommand("det", "Determinant of a 2x2 or 3x3 matrix");
  jdet->add_option("matrix", matrix)->required();
  auto* jcone = jordan->add_subcommand("cone", "Cone membership");
  jcone->add_option("matrix", matrix)->required();
  auto* jact = jordan->add_subcommand("act", "Apply a word of generators to a tube point");
  jact->add_option("--word", word)->required();
  jact->add_option("point", point)->required();

  auto* satake = app.add_subcommand("satake", "Satake parameter computations");
  satake->require_subcommand(1);
  std::string which, family = "I", b_value = "1";
  int eps = 1;
  bool check_theorem = false;
  auto* ssolve = satake->add_subcommand("solve", "Solve the constraint system of a stabilizer case");
  ssolve->add_option("--case", which)->required();
  auto* seuler = satake->add_subcommand("euler", "Expand the local factor of a family");
  seuler->add_option("--family", family);
  seuler->add_option("--epsilon", eps);
  seuler->add_option("--b", b_value);
  seuler->add_flag("--check-theorem", check_theorem);

  auto* mf = app.add_subcommand("modforms", "Modular form series and Hecke data");
  mf->require_subcommand(1);
  std::string kind = "delta";
  int weight = 12;
  std::size_t order = 20;
  long p = 2;
  int k = 6;
  auto* mseries = mf->add_subcommand("series", "q-expansion");
  mseries->add_option("--kind", kind);
  mseries->add_option("--weight", weight);
  mseries->add_option("--order", order);
  auto* meigen = mf->add_subcommand("eigenvalues", "Hecke eigenvalues of the weight-w cusp form, p up to --max-p");
  long max_p = 13;
  meigen->add_option("--weight", weight);
  meigen->add_option("--max-p", max_p);
  auto* mh24 = mf->add_subcommand("hecke24", "T_p on weight-24 cusp forms");
  mh24->add_option("--p", p);
  auto* mconst = mf->add_subcommand("constant", "Normalising constant C_{2k+8}");
  mconst->add_option("--k", k);

  auto* roots = app.add_subcommand("roots", "E7 roots");
  roots->require_subcommand(1);
  auto* roots_dump = roots->add_subcommand("dump", "All roots as 7-digit strings");

  auto* coset = app.add_subcommand("coset", "Double-coset stabilizer data");
  coset->require_subcommand(1);
  auto* coset_table = coset->add_subcommand("table1", "Stabilizer types, compared with the printed table");
  auto* coset_sets = coset->add_subcommand("sets", "Nilradical root sets and the swapped pairs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(suite, as_json);
    if (*dump) {
      print(dump_target(target, load_group(cache_dir())));
      return 0;
    }
    if (*cache_build_cmd) print(cache_json(cache_build(cache_dir())));
    if (*cache_info_cmd) print(cache_json(cache_info(cache_dir())));
    if (*cache_clean_cmd) print({{"path", cache_file(cache_dir()).string()}, {"removed", cache_clean(cache_dir())}});
    if (*octo_table) {
      json t = json::array();
      for (const auto& row : multiplication_table()) {
        json r = json::array();
        for (const auto& e : row) r.push_back({{"sign", e.sign}, {"index", e.index}});
        t.push_back(r);
      }
      print(t);
    }
    if (*octo_mul) {
      Octonion x = octonion_of(json::parse(mul_x)), y = octonion_of(json::parse(mul_y));
      print({{"product", to_json(mul(x, y))}, {"norm", to_string(norm(mul(x, y)))}});
    }
    if (*jdet || *jcone) {
      json m = json::parse(matrix);
      bool three = m.contains("c");
      json out;
      if (*jdet)
        out["det"] = to_string(three ? det3(jordan3_of(m)) : det2(jordan2_of(m)));
      else
        out["cone"] = to_string(three ? cone_membership3(jordan3_of(m)) : cone_membership2(jordan2_of(m)));
      print(out);
    }
    if (*jact) {
      WordAction r = apply_word(word_of(json::parse(word)), point_of(json::parse(point)));
      print({{"Z", to_json(r.Z)}, {"j", to_json(r.j)}});
    }
    if (*ssolve) return cmd_satake_solve(which);
    if (*seuler) return cmd_satake_euler(family, eps, b_value, check_theorem);
    if (*mseries) print(to_json(series(kind, weight, order)));
    if (*meigen) {
      QSeries f = cusp_generator(weight, static_cast<std::size_t>(max_p) * 8);
      json rows = json::array();
      for (long q = 2; q <= max_p; ++q) {
        bool prime = true;
        for (long d = 2; d * d <= q; ++d) prime = prime && q % d != 0;
        if (!prime) continue;
        QSeries T = hecke_Tp(f, q);
        bool eigen = T == f.coeffs[q] * f.truncated(T.order());
        rows.push_back({{"p", q}, {"eigenvalue", to_string(f.coeffs[q])}, {"eigen_checked", eigen}});
      }
      print({{"weight", weight}, {"eigenvalues", rows}});
    }
    if (*mh24) {
      HeckeMatrix h = hecke_matrix_weight24(p);
      json m = json::array();
      for (std::size_t i = 0; i < 2; ++i) m.push_back({to_string(h.matrix(i, 0)), to_string(h.matrix(i, 1))});
      json cp = json::array();
      for (const auto& c : h.charpoly) cp.push_back(to_string(c));
      print({{"p", p}, {"matrix", m}, {"charpoly", cp}, {"discriminant", to_string(h.discriminant)}});
    }
    if (*mconst) print({{"k", k}, {"weight", 2 * k + 8}, {"value", to_string(eisenstein_constant(k))}});
    if (*roots_dump) print(dump_target("roots", E7Group::instance()));
    if (*coset_table) return cmd_coset_table1();
    if (*coset_sets) {
      E7Group G = load_group(cache_dir());
      json out;
      for (const char* t : {"phi0", "phi1", "phi2", "pairs"}) out[t] = dump_target(t, G);
      print(out);
    }
    return 0;
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return kExitEnv;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitEnv;
  } catch (const json::exception& e) {
    std::cerr << "bad json: " << e.what() << "\n";
    return kExitEnv;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnv;
  }
}
