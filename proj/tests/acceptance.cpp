// One line per acceptance criterion; exit status 1 if any is red.

#include <future>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "exalg/suites.hpp"

using namespace exalg;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::pair<std::string, std::string>> checks;  // (suite, check id)
};

std::vector<Criterion> criteria() {
  std::vector<std::pair<std::string, std::string>> modulus, identities, satake;
  for (const char* t : {"Q0", "P-on-T0", "Q1", "P-on-T1", "Q2", "P-on-T2", "Q3", "P-on-T3", "B1", "B2"})
    modulus.push_back({"coset", std::string("modulus ") + t});
  for (const char* id : {"h_g1(-1) h_g3(-1) h_g6(-1) = h_b7(-1)", "n = n7 n6 n7^-1", "y_0000011 = n6 y7 n6^-1",
                         "theta^2 = 1", "centralizer of theta"})
    identities.push_back({"coset", id});
  for (const char* id : {"Q2 constraint system", "Q3 constraint system", "Q3 yields family (I)", "Q2 yields family (II)",
                         "Q0 contradiction", "Q1 contradiction", "Q3 relation b1 = eps*alpha*beta",
                         "Q3 relation b2 = eps*alpha/beta", "Q3 relation b4 = p*b3", "Q3 relation b5 = p^2*b3",
                         "Q3 relation b6 = p^3*b3"})
    satake.push_back({"satake", id});
  return {
      {1,
       "root tables: 126 roots, highest root, X, R1(1), Phi0/Phi1/Phi2, swapped pairs",
       {{"roots", "root count"},
        {"roots", "highest root"},
        {"roots", "X-set equals printed list"},
        {"roots", "R1(1) equals printed list"},
        {"coset", "Phi0 nilradical roots"},
        {"coset", "Phi1 nilradical roots"},
        {"coset", "Phi2 nilradical roots"},
        {"coset", "16 pairs interchanged by g'"}}},
      {2,
       "stabilizer types D5T2U11, A5A1T1U15, A4T2U21, B3A1T1U17",
       {{"coset", "stabilizer type g0"}, {"coset", "stabilizer type g1"}, {"coset", "stabilizer type g2"}, {"coset", "stabilizer type g3"}}},
      {3, "379 vanishing positions on P", {{"coset", "parabolic zero pattern"}}},
      {4, "modulus characters", modulus},
      {5, "group identities in the 56-dimensional representation", identities},
      {6, "Satake constraint systems and solutions", satake},
      {7,
       "Euler factor identities",
       {{"satake", "degree-12 identity (eps=1,b=1)"},
        {"satake", "degree-12 identity (eps=-1)"},
        {"satake", "degree-12 identity (b=p)"},
        {"satake", "Eisenstein specialization beta -> p^(1/2)"},
        {"satake", "degree-56 factor degree"},
        {"satake", "degree-56 inversion closure"}}},
      {8,
       "octonion and Jordan algebra identities",
       {{"octonion", "table rules: unit, squares, cyclic triples"},
        {"octonion", "integral lattice closure"},
        {"jordan", "det3 of a block matrix is r det2"},
        {"jordan", "iota is an involution of the tube"},
        {"jordan", "j(iota, iota Z) j(iota, Z) = 1"}}},
      {9,
       "modular forms",
       {{"modforms", "B12 by recurrence"},
        {"modforms", "Delta q^2 coefficient"},
        {"modforms", "T2 Delta = -24 Delta to order 50"},
        {"modforms", "E4^3 - E6^2 = 1728 Delta to order 50"},
        {"modforms", "Ramanujan bound for tau(2)"},
        {"modforms", "C_20 is a negative exact rational"}}},
  };
}

}  // namespace

int main() {
  const E7Group& G = E7Group::instance();
  std::map<std::string, std::future<SuiteReport>> jobs;
  for (const auto& n : suite_names()) jobs[n] = std::async(std::launch::async, [&G, n] { return run_suite(n, G); });
  std::map<std::string, std::map<std::string, Check>> results;
  for (auto& [name, job] : jobs)
    for (auto& c : job.get().checks) results[name][c.id] = c;

  bool all = true;
  for (const auto& cr : criteria()) {
    std::vector<std::string> failed;
    for (const auto& [suite, id] : cr.checks) {
      auto it = results[suite].find(id);
      if (it == results[suite].end())
        failed.push_back(id + " (missing)");
      else if (!it->second.pass)
        failed.push_back(id + ": expected " + it->second.expected + ", computed " + it->second.computed);
    }
    all = all && failed.empty();
    std::cout << (failed.empty() ? "PASS" : "FAIL") << " criterion " << cr.number << ": " << cr.title << "\n";
    for (const auto& f : failed) std::cout << "     " << f << "\n";
  }
  return all ? 0 : 1;
}
