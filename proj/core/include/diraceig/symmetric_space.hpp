#pragma once

#include "diraceig/root_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diraceig {

/// Inner symmetric pair (G, K): G's root system together with the subset of
/// positive roots belonging to K. Both share the ambient torus, so the pair
/// is inner by construction.
struct SymmetricPair {
  RootSystem g;
  std::vector<int> k_positive;           // indices into g.positive_roots
  std::vector<int> noncompact_positive;  // complement, ascending
  WeightVec delta_k;
  long n = 0;  // dim G/K = 2 |noncompact_positive|
  std::string name;
  bool spin = false;
  bool spin_unique = false;

  /// delta_G - delta_K, the half-sum of the noncompact positive roots.
  WeightVec delta_n() const { return g.weyl_vector - delta_k; }
};

/// Assemble a pair from G and the K-positive index set; computes delta_K and
/// the complement, rejects K = G (InvalidPair).
SymmetricPair make_symmetric_pair(RootSystem g, std::vector<int> k_positive,
                                  std::string name, bool spin, bool spin_unique);

enum class NodeMark { require_two, allow_one_or_two };

/// Marked-node pair: the K-positive roots are those whose coefficient at the
/// marked simple root differs from 1. `node` is 1-based. The coefficient of
/// the highest root at the node must be 2 (coefficient-1 nodes, which give the
/// Hermitian pairs, are accepted only under allow_one_or_two); anything else
/// throws NodeNotOrderTwo. Spin flags are not derived here: the catalog owns
/// them.
SymmetricPair pair_from_marked_node(const RootSystem& rs, int node,
                                    NodeMark mark = NodeMark::require_two);

/// Sp_{m+1} / (Sp_m x Sp_1) in the orthogonal chart, m >= 1. dim = 4m.
SymmetricPair quaternionic_projective(long m);

/// SU_{m+2} / S(U_m x U_2) in its (m+1)-coordinate chart, m >= 2.
/// Spin structure exists only for even m: odd m throws NoSpinStructure unless
/// force is set, in which case the pair carries spin = false.
SymmetricPair complex_grassmannian2(long m, bool force = false);

/// Spin_{m+4} / (Spin_m Spin_4) in the orthogonal chart, even m >= 4. The
/// chart itself needs even m, so odd m always throws NoSpinStructure.
SymmetricPair real_grassmannian4(long m);

/// Scal of the Killing metric on G/K; equals n/2.
Rational scalar_curvature(const SymmetricPair& p);

/// K-positive roots not expressible as a sum of two K-positive roots.
std::vector<WeightVec> k_simple_roots(const SymmetricPair& p);

/// Nodes (1-based) with highest-root coefficient 2; when none exist (A-type),
/// falls back to the coefficient-1 nodes.
std::vector<int> candidate_nodes(const RootSystem& rs);

/// Quotient of integer-coefficient polynomials in m. coefficient k multiplies m^k.
struct RationalFormula {
  std::vector<Rational> num;
  std::vector<Rational> den;
  Rational eval(long m) const;
  bool is_constant() const { return num.size() <= 1 && den.size() == 1; }
};

struct CatalogEntry {
  enum class Recipe { coordinate_hp, coordinate_gr2, coordinate_gr4, marked_node };

  std::string key;   // "HP", "Gr2", "Gr4", "G2", "F4", "E6", "E7", "E8"
  std::string name;  // display name; parameterized entries keep the literal m
  bool parameterized = false;
  long min_m = 0;
  long m_step = 1;
  Recipe recipe = Recipe::marked_node;
  Family family = Family::A;
  int node = 0;        // marked-node recipes
  long fixed_dim = 0;  // non-parameterized entries
  bool spin_needs_even_m = false;
  bool spin = false;
  bool spin_unique = false;
  std::optional<RationalFormula> expected_lambda_sq;
  std::optional<RationalFormula> expected_lambda_count;

  long dim(long m) const { return parameterized ? 4 * m : fixed_dim; }
};

/// The eight named quaternion-Kaehler pairs with their construction recipes
/// and expected exact values where known. The F4 entry has no spin structure
/// and carries no expectations.
const std::vector<CatalogEntry>& catalog();

/// Case-insensitive key lookup, or exact display-name match.
const CatalogEntry* find_catalog_entry(std::string_view selector);

/// Instantiate a catalog entry. Parameterized entries require m; fixed entries
/// reject it. force is forwarded to the constructors that accept it.
SymmetricPair make_space(const CatalogEntry& entry, std::optional<long> m,
                         bool force = false);

}  // namespace diraceig
