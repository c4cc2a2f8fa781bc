#include "diraceig/dirac.hpp"

#include <algorithm>

namespace diraceig {

namespace {

void require_valid(const SymmetricPair& p) {
  if (p.noncompact_positive.empty())
    throw InvalidPair("pair has no noncompact roots (K = G)");
}

DiracResult base_result(const SymmetricPair& p, Method method) {
  DiracResult r;
  r.method = method;
  r.lambda_set = lambda_set(p);
  r.term_distance = Rational(2) * norm_sq(p.g.form, p.delta_n());
  r.term_lambda = Rational(4) * r.lambda_set.sum();
  r.term_dim = Rational(p.n, 8);
  return r;
}

void check_positive(const DiracResult& r) {
  if (r.lambda_sq.sign() <= 0) throw Error("nonpositive lambda^2; invalid pair data");
}

/// indices of orbit elements w delta_G with <w delta_G, alpha> > 0 for every
/// K-positive alpha; equivalent to w Phi_G+ containing Phi_K+ since delta_G
/// pairs positively with exactly the positive roots
std::vector<std::size_t> restricted_subset(const SymmetricPair& p, const OrbitIndex& oi) {
  std::vector<std::vector<std::int64_t>> functionals;
  functionals.reserve(p.k_positive.size());
  for (int idx : p.k_positive)
    functionals.push_back(
        scaled_functional(p.g, p.g.positive_roots[static_cast<std::size_t>(idx)]));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < oi.size(); ++i) {
    const auto raw = oi.raw(i);
    const bool ok = std::all_of(functionals.begin(), functionals.end(),
                                [&](const std::vector<std::int64_t>& f) {
                                  return detail::raw_dot(raw, f) > 0;
                                });
    if (ok) kept.push_back(i);
  }
  return kept;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::weyl_min: return "weyl-min";
    case Method::restricted_w: return "restricted-W";
    case Method::spin_weights: return "spin-weights";
  }
  return "?";
}

Rational LambdaSet::sum() const {
  Rational s;
  for (const auto& e : elements) s += e.value;
  return s;
}

LambdaSet lambda_set(const SymmetricPair& p) {
  LambdaSet out;
  for (const auto& theta : p.g.positive_roots) {
    Rational v = inner(p.g.form, theta, p.delta_k);
    if (v.sign() < 0) out.elements.push_back({theta, std::move(v)});
  }
  return out;
}

DiracResult eigenvalue_closed(const SymmetricPair& p, bool force) {
  require_valid(p);
  if (!p.spin && !force) throw NoSpinStructure(p.name + " has no spin structure");
  DiracResult r = base_result(p, Method::closed_form);
  r.lambda_sq = r.term_distance + r.term_lambda + r.term_dim;
  check_positive(r);
  return r;
}

DiracResult eigenvalue_weyl_min(const SymmetricPair& p, std::size_t cap) {
  require_valid(p);
  const auto extremum = min_dist_over_orbit(p.g, p.g.weyl_vector, p.delta_k, cap);
  DiracResult r = base_result(p, Method::weyl_min);
  r.lambda_sq = Rational(2) * extremum.value + r.term_dim;
  check_positive(r);
  return r;
}

DiracResult eigenvalue_restricted_w(const SymmetricPair& p, std::size_t cap) {
  require_valid(p);
  const OrbitIndex oi = OrbitIndex::build(p.g, p.g.weyl_vector, cap);
  const auto kept = restricted_subset(p, oi);
  const auto f = scaled_functional(p.g, p.delta_k);
  std::size_t best = kept.front();  // the identity always qualifies
  __int128 best_dot = detail::raw_dot(oi.raw(best), f);
  for (std::size_t i : kept) {
    const __int128 dot = detail::raw_dot(oi.raw(i), f);
    if (dot > best_dot) {
      best_dot = dot;
      best = i;
    }
  }
  DiracResult r = base_result(p, Method::restricted_w);
  r.lambda_sq =
      Rational(2) * norm_sq(p.g.form, oi.point(best) - p.delta_k) + r.term_dim;
  check_positive(r);
  return r;
}

std::vector<WeightVec> spin_highest_weights(const SymmetricPair& p, std::size_t cap) {
  require_valid(p);
  const OrbitIndex oi = OrbitIndex::build(p.g, p.g.weyl_vector, cap);
  const auto kept = restricted_subset(p, oi);

  std::vector<char> noncompact(p.g.positive_roots.size(), 0);
  for (int idx : p.noncompact_positive) noncompact[static_cast<std::size_t>(idx)] = 1;

  std::vector<WeightVec> weights;
  weights.reserve(kept.size());
  for (std::size_t i : kept) {
    const WeightVec pt = oi.point(i);
    // delta_G - w delta_G must be a sum of distinct noncompact positive roots;
    // the witness word's inversion set exhibits the decomposition
    const auto inv = inversion_set(p.g, oi.word(i));
    WeightVec total = WeightVec::zero(p.g.basis);
    for (const auto& root : inv) {
      const auto idx = find_positive_root(p.g, root);
      if (!idx || !noncompact[static_cast<std::size_t>(*idx)])
        throw Error("restricted orbit element drops a compact root");
      total = total + root;
    }
    if (!(total == p.g.weyl_vector - pt))
      throw Error("inversion set does not account for delta_G - w delta_G");
    weights.push_back(pt - p.delta_k);
  }
  return weights;
}

DiracResult eigenvalue_spin_weights(const SymmetricPair& p, std::size_t cap) {
  const auto weights = spin_highest_weights(p, cap);
  Rational best = norm_sq(p.g.form, weights.front());
  for (std::size_t i = 1; i < weights.size(); ++i) {
    Rational v = norm_sq(p.g.form, weights[i]);
    if (v < best) best = std::move(v);
  }
  DiracResult r = base_result(p, Method::spin_weights);
  r.lambda_sq = Rational(2) * best + r.term_dim;
  check_positive(r);
  return r;
}

LemmaReport verify_lambda_lemma(const SymmetricPair& p, std::size_t cap) {
  require_valid(p);
  const auto mx = max_inner_over_orbit(p.g, p.g.weyl_vector, p.delta_k, cap);
  LemmaReport report;
  report.orbit_max = mx.value;
  report.lambda_rhs = inner(p.g.form, p.g.weyl_vector, p.delta_k) - lambda_set(p).sum();
  report.holds = (report.orbit_max == report.lambda_rhs);
  return report;
}

}  // namespace diraceig
