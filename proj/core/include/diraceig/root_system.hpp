#pragma once

#include "diraceig/weight.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diraceig {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view text);

/// Root system of a compact simple group with an exact invariant form.
///
/// positive_roots is sorted by height (sum of simple-root coefficients), then
/// lexicographically by the coefficient vectors; every listing derived from it
/// is reproducible.
struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  BasisTag basis;
  std::vector<WeightVec> simple_roots;
  std::vector<WeightVec> positive_roots;
  /// positive_coeffs[k][i]: coefficient of simple_roots[i] in positive_roots[k].
  std::vector<std::vector<long>> positive_coeffs;
  WeightVec highest_root;
  WeightVec weyl_vector;
  InnerForm form;
  long dim_g = 0;  // 2 |positive_roots| + rank

  std::string name() const;  // "A3", "C4", "E8", ...
};

/// Cartan-data construction in the simple-root basis, normalized so that
/// (alpha, alpha) = 2 for long roots. Supported: A (rank >= 1), B/C (>= 2),
/// D (>= 3), G2/F4/E6/E7/E8 at their fixed ranks.
RootSystem build_root_system(Family family, int rank);
/// Exceptional families at their fixed rank.
RootSystem build_root_system(Family family);

/// Closure of explicit simple roots under their reflections; the coordinate
/// models pass their own form here.
RootSystem assemble_root_system(Family family, BasisTag basis,
                                std::vector<WeightVec> simple_roots, InnerForm form);

struct NormalizedSystem {
  RootSystem system;
  Rational scale;  // factor applied to the Gram matrix
};

/// Rescale the form so that <delta, delta> = dim/24 holds exactly.
NormalizedSystem killing_normalize(const RootSystem& rs);

/// Weights dual to the simple coroots: 2 <w_i, a_j> / <a_j, a_j> = delta_ij.
std::vector<WeightVec> fundamental_weights(const RootSystem& rs);

/// Index of v in positive_roots, if v is a positive root.
std::optional<int> find_positive_root(const RootSystem& rs, const WeightVec& v);

}  // namespace diraceig
