#include <doctest.h>

#include <set>

#include "exalg/errors.hpp"
#include "exalg/reference.hpp"
#include "exalg/rootsys.hpp"

using namespace exalg;

namespace {

template <class C>
std::set<std::string> strs(const C& c) {
  std::set<std::string> s;
  for (const auto& x : c) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Root>)
      s.insert(root_string(x));
    else
      s.insert(std::string(x));
  }
  return s;
}

}  // namespace

TEST_CASE("E7 roots") {
  const auto& rs = e7();
  CHECK(rs.roots().size() == 126);
  CHECK(rs.positive_roots().size() == 63);
  CHECK(root_string(rs.highest_root()) == "2234321");
  for (std::size_t i = 0; i + 1 < rs.roots().size(); ++i) CHECK(height(rs.roots()[i]) <= height(rs.roots()[i + 1]));
  for (const auto& r : rs.roots()) {
    CHECK(rs.pair(r, r) == 2);
    CHECK(rs.is_root(-r));
    CHECK(parse_root(root_string(r)) == r);
  }
  CHECK(rs.index_of(parse_root("1111111")) >= 0);
  CHECK(rs.index_of(parse_root("1000001")) == -1);
  CHECK(root_string(parse_root("-0000001")) == "-0000001");
}

TEST_CASE("Cartan matrix is the Bourbaki E7 matrix") {
  const auto& C = e7().cartan();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(C[i][j] == C[j][i]);
  CHECK(C[0][2] == -1);
  CHECK(C[1][3] == -1);
  CHECK(C[2][3] == -1);
  CHECK(C[5][6] == -1);
  CHECK(C[0][1] == 0);
}

TEST_CASE("subsystems") {
  const auto& rs = e7();
  std::vector<Root> simple;
  for (int i = 1; i <= 7; ++i) simple.push_back(RootSystemE7::simple(i));
  CHECK(classify_subsystem(rs, simple) == "E7");
  CHECK(span_roots(rs, simple).size() == 126);
  CHECK(classify_subsystem(rs, {simple[0], simple[2], simple[3]}) == "A3");
  CHECK(classify_subsystem(rs, {simple[0], simple[6]}) == "A1A1");
  CHECK(h_roots(rs).size() == 62);
}

TEST_CASE("sets X and R1") {
  const auto& rs = e7();
  CHECK(strs(set_X(rs)) == strs(expected::kSetX));
  CHECK(strs(set_R1(rs, std::nullopt)) == strs(expected::kR1Trivial));
  CHECK_THROWS_AS(set_R1(rs, parse_root("1000000")), UnknownTag);
  for (const auto& mu : set_X(rs)) CHECK_FALSE(set_R1(rs, mu).empty());
}
