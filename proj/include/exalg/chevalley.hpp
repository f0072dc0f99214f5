#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exalg/linalg.hpp"
#include "exalg/rootsys.hpp"

namespace exalg {

inline constexpr const char* kConventionVersion = "e7-chevalley/extraspecial-min-index/v1";

// Adjoint basis: h_1..h_7 (indices 0..6), then e_alpha in root order (7 + root index).
inline constexpr int kAdjointDim = 133;
inline constexpr int kRepDim = 56;

struct StructureConstants {
  int n_roots = 0;
  std::vector<int> table;  // n_roots * n_roots, N_{a,b}; 0 when a + b is not a root

  int operator()(int a, int b) const { return table[a * n_roots + b]; }
  int at(const RootSystemE7& rs, const Root& a, const Root& b) const;
};

// Signs normalised so that N_{beta_i, gamma - beta_i} = +1 for the minimal such i.
StructureConstants build_structure_constants(const RootSystemE7& rs);

struct StructureConstantReport {
  bool string_lengths = true;
  bool antisymmetry = true;
  bool negation = true;  // N_{-a,-b} = -N_{a,b}
  bool extraspecial = true;
  bool jacobi = true;
  bool ok() const { return string_lengths && antisymmetry && negation && extraspecial && jacobi; }
};
StructureConstantReport validate_structure_constants(const RootSystemE7& rs, const StructureConstants& sc);

// Fundamental-weight coordinates.
using Weight = std::array<int, 7>;

// A matrix with at most one nonzero entry per column: column j maps to row[j] with value val[j].
struct MonomialMap {
  std::array<int, kRepDim> row;
  std::array<int, kRepDim> val;
  MonomialMap() { row.fill(-1), val.fill(0); }
};

struct Rep56 {
  std::vector<Weight> weights;
  std::vector<int> level;  // beta_7 coefficient of varpi_7 - mu
  std::vector<MonomialMap> gens;  // indexed by root index

  int weight_index(const Weight& w) const;
  QMatrix dense(int root_index) const;
  int top_index() const;
};

// Throws ValidationFailure when a representation relation fails.
Rep56 build_rep56(const RootSystemE7& rs, const StructureConstants& sc);

int weight_pairing(const Weight& mu, const Root& alpha);
Weight root_to_weight(const Root& alpha);

using GroupElement56 = QMatrix;

struct CosetReps {
  GroupElement56 g0, g1, g2, g3, n, g_prime;
};

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

enum class ModulusTag { Q0, Q1, Q2, Q3, P_T0, P_T1, P_T2, P_T3, B1, B2 };
ModulusTag parse_modulus_tag(const std::string& s);
std::string to_string(ModulusTag t);

// Exponent of |t_j| for j = 1..7 (0 for absent parameters).
using ExponentFunctional = std::array<int, 7>;

struct TorusParameterization {
  int index = 0;
  std::vector<int> params;                     // parameter labels j (1-based)
  std::vector<std::array<int, 7>> gamma_mult;  // per parameter, multiplicities of gamma_1..gamma_7
  std::array<int, 7> cocharacter(int j) const;  // simple-coroot coordinates
};
TorusParameterization torus_parameterization(int i);

struct LeviRoot {
  QVector restriction;  // values on the torus basis
  std::vector<Root> support;
};

struct QComputation {
  int index = 0;
  std::size_t dim = 0;
  std::string levi_type;
  int torus_rank = 0;
  std::size_t unipotent_dim = 0;
  std::size_t torus_dim = 0;
  std::size_t levi_root_count = 0;
  std::size_t semisimple_rank = 0;
  std::vector<Root> nilradical_roots;
  bool nilradical_spanned_by_roots = false;
  std::vector<std::pair<Root, Root>> diagonal_pairs;  // (alpha, g'(alpha)), in the conjugated frame
  std::vector<Root> fixed_roots;
  std::vector<Root> conjugated_support;

  QMatrix q_basis;  // adjoint coordinates, columns
  QMatrix n_basis;
  QMatrix t_basis;  // 7 x r, Cartan coordinates

  std::string table_row() const;  // e.g. "D5T2U11"
};

class E7Group {
 public:
  E7Group(const RootSystemE7& rs, StructureConstants sc, Rep56 rep);

  // Built once from scratch; thread-safe.
  static const E7Group& instance();

  const RootSystemE7& roots() const { return *rs_; }
  const StructureConstants& structure_constants() const { return sc_; }
  const Rep56& rep() const { return rep_; }

  QMatrix e(const Root& a) const;
  QMatrix h_cartan(int i) const;  // rho(h_i), i = 1..7
  QMatrix basis_matrix(int k) const;  // adjoint basis element k

  GroupElement56 x_alpha(const Root& a, const Rational& c) const;
  GroupElement56 n_alpha(const Root& a) const;
  GroupElement56 n_alpha_inv(const Root& a) const;
  GroupElement56 h_alpha(const Root& a, const Rational& c) const;  // throws ZeroScalar
  GroupElement56 y_alpha(const Root& a) const;
  GroupElement56 theta() const;
  CosetReps coset_reps() const;

  // Adjoint coordinates of X; throws DecompositionFailure if X is not in the image of the Lie algebra.
  QVector to_adjoint(const QMatrix& X) const;
  QMatrix from_adjoint(const QVector& v) const;
  // Coordinates of g X g^{-1} for adjoint basis element k, using only needed entries.
  QVector conjugate_basis(const GroupElement56& g, const GroupElement56& g_inv, int k) const;
  Rational trace_form(const QVector& u, const QVector& v) const;

  std::vector<std::pair<int, int>> parabolic_zero_pattern() const;
  std::size_t identically_vanishing_count() const;
  bool is_in_P(const GroupElement56& g) const;

  // Ad(g^{-1}) Lie(P) intersected with Lie(H); columns are adjoint coordinates.
  QMatrix stabilizer_algebra(const GroupElement56& g) const;
  QComputation compute_Q(int i) const;

  ExponentFunctional nu_exponents(int i) const;
  ExponentFunctional modulus_exponents(ModulusTag tag) const;
  ExponentFunctional modulus_exponents(ModulusTag tag, const QComputation& q) const;

  // Root hit by Ad(g) e_alpha, for a monomial g.
  Root act_on_root(const GroupElement56& g, const Root& a) const;

  // Roots alpha with alpha(theta) = 1, read off the matrix of theta; the centralizer has dimension 7 + size.
  std::vector<Root> theta_fixed_roots() const;

  std::vector<IdentityCheck> verify_coset_identities() const;

 private:
  const RootSystemE7* rs_;
  StructureConstants sc_;
  Rep56 rep_;
  QMatrix cartan_solver_;          // 7 x 7, maps chosen diagonal entries to Cartan coordinates
  std::array<int, 7> cartan_rows_{};
  std::vector<Rational> killing_root_;  // tr(e_a e_{-a})
  std::array<std::array<Rational, 7>, 7> killing_cartan_{};
};

}  // namespace exalg
