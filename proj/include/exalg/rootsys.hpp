#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exalg/linalg.hpp"

namespace exalg {

// Coefficients over beta_1 .. beta_7 (Bourbaki numbering).
using Root = std::array<int, 7>;
using CartanMatrix = std::array<std::array<int, 7>, 7>;

std::string root_string(const Root& r);
Root parse_root(const std::string& s);
int height(const Root& r);
Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);
Root operator*(int k, const Root& a);

class RootSystemE7 {
 public:
  const CartanMatrix& cartan() const { return cartan_; }
  // Ordered by height, then lexicographically.
  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> positive_roots() const;

  int index_of(const Root& r) const;  // -1 when not a root
  bool is_root(const Root& r) const { return index_of(r) >= 0; }

  static Root simple(int i);  // beta_i, i = 1..7
  Root highest_root() const;
  // gamma_1 = 0112221, gamma_2..gamma_6 = beta_1, beta_3, beta_4, beta_5, beta_2, gamma_7 = beta_7
  static Root gamma(int k);
  static Root gamma6_prime() { return simple(6); }

  // (a, b) under the Cartan form; equals <a, b^vee> since all roots have norm 2.
  int pair(const Root& a, const Root& b) const;

 private:
  friend RootSystemE7 generate();
  CartanMatrix cartan_{};
  std::vector<Root> roots_;
  std::map<Root, int> index_;
};

RootSystemE7 generate();
const RootSystemE7& e7();

int pair(const Root& a, const Root& b);

std::vector<Root> h_roots(const RootSystemE7& rs);
// All roots in the Z-span of the given roots.
std::vector<Root> span_roots(const RootSystemE7& rs, const std::vector<Root>& gens);
std::vector<Root> set_X(const RootSystemE7& rs);
// tag = nullopt means n' = 1, otherwise n' = n_mu with mu in X; throws UnknownTag.
std::vector<Root> set_R1(const RootSystemE7& rs, const std::optional<Root>& tag);
bool theta_conjugate_parity_odd(const Root& alpha, const std::optional<Root>& mu);

// Component types sorted by rank (descending), e.g. "B3A1".
std::string classify_gram(const QMatrix& gram);
std::string classify_subsystem(const RootSystemE7& rs, const std::vector<Root>& simple);

}  // namespace exalg
