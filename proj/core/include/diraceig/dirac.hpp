#pragma once

#include "diraceig/symmetric_space.hpp"
#include "diraceig/weyl.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace diraceig {

inline constexpr std::size_t kDefaultOrbitCap = 2'000'000;

/// A positive root pairing strictly negatively with delta_K, with its value.
struct LambdaEntry {
  WeightVec root;
  Rational value;
};

struct LambdaSet {
  std::vector<LambdaEntry> elements;
  std::size_t size() const { return elements.size(); }
  Rational sum() const;
};

enum class Method { closed_form, weyl_min, restricted_w, spin_weights };
std::string method_name(Method m);

/// Square of the first Dirac eigenvalue with its exact decomposition.
/// For the closed form, lambda_sq = term_distance + term_lambda + term_dim.
struct DiracResult {
  Rational lambda_sq;
  Rational term_distance;  // 2 ||delta_G - delta_K||^2
  Rational term_lambda;    // 4 sum over the Lambda set (always <= 0)
  Rational term_dim;       // n/8
  LambdaSet lambda_set;
  Method method = Method::closed_form;
};

/// All positive G-roots with <theta, delta_K> < 0, in root order.
LambdaSet lambda_set(const SymmetricPair& p);

/// Closed form: 2 ||delta_G - delta_K||^2 + 4 sum_Lambda <theta, delta_K> + n/8.
/// Throws NoSpinStructure when the pair has none and force is unset.
DiracResult eigenvalue_closed(const SymmetricPair& p, bool force = false);

/// Minimization of 2 ||w delta_G - delta_K||^2 + n/8 over the full Weyl orbit.
DiracResult eigenvalue_weyl_min(const SymmetricPair& p,
                                std::size_t cap = kDefaultOrbitCap);

/// Same minimization restricted to the w with w Phi_G+ containing Phi_K+,
/// tested through the equivalent pairing criterion <w delta_G, alpha> > 0 for
/// every K-positive alpha.
DiracResult eigenvalue_restricted_w(const SymmetricPair& p,
                                    std::size_t cap = kDefaultOrbitCap);

/// Minimization of 2 ||beta||^2 + n/8 over the spin highest-weight candidates.
DiracResult eigenvalue_spin_weights(const SymmetricPair& p,
                                    std::size_t cap = kDefaultOrbitCap);

/// Candidates w delta_G - delta_K over the restricted subset, each verified
/// against the characterization that delta_G - w delta_G is a sum of distinct
/// noncompact positive roots (via the witness word's inversion set).
std::vector<WeightVec> spin_highest_weights(const SymmetricPair& p,
                                            std::size_t cap = kDefaultOrbitCap);

struct LemmaReport {
  Rational orbit_max;   // max over the Weyl orbit of <w delta_G, delta_K>
  Rational lambda_rhs;  // <delta_G, delta_K> - sum_Lambda <theta, delta_K>
  bool holds = false;
};

/// Checks max_w <w delta_G, delta_K> = <delta_G, delta_K> - sum_Lambda exactly.
LemmaReport verify_lambda_lemma(const SymmetricPair& p,
                                std::size_t cap = kDefaultOrbitCap);

}  // namespace diraceig
