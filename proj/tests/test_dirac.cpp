#include <doctest.h>

#include "diraceig/dirac.hpp"

#include <algorithm>
#include <set>

using namespace diraceig;

namespace {

SymmetricPair space(const char* key) {
  return make_space(*find_catalog_entry(key), std::nullopt);
}

// literal subset test w Phi_G+ contains Phi_K+, applying the witness word to
// every positive root; independent of the pairing criterion used by the library
bool contains_k_roots(const SymmetricPair& p, const ReducedWord& word) {
  std::set<std::vector<Rational>> image;
  for (const auto& theta : p.g.positive_roots)
    image.insert(apply_word(p.g, word, theta).coords);
  return std::all_of(p.k_positive.begin(), p.k_positive.end(), [&](int idx) {
    return image.count(p.g.positive_roots[static_cast<std::size_t>(idx)].coords) > 0;
  });
}

}  // namespace

TEST_CASE("lambda sets") {
  for (long m : {1L, 2L, 3L, 4L, 5L, 6L})
    CHECK(lambda_set(quaternionic_projective(m)).size() == 0);

  for (long m : {2L, 4L, 6L}) {
    const auto lam = lambda_set(complex_grassmannian2(m));
    CHECK(lam.size() == static_cast<std::size_t>(m - 1));
    CHECK(lam.sum() == Rational(-m * m, 8 * (m + 2)));
  }

  const auto e6 = lambda_set(space("E6"));
  CHECK(e6.size() == 7);
  CHECK(e6.sum() == Rational(-7, 12));
  const auto e7 = lambda_set(space("E7"));
  CHECK(e7.size() == 13);
  CHECK(e7.sum() == Rational(-41, 36));
  const auto e8 = lambda_set(space("E8"));
  CHECK(e8.size() == 25);
  CHECK(e8.sum() == Rational(-137, 60));
}

TEST_CASE("every Lambda root is noncompact with a negative value") {
  std::vector<SymmetricPair> pairs;
  for (long m : {1L, 2L, 3L}) pairs.push_back(quaternionic_projective(m));
  for (long m : {2L, 4L}) pairs.push_back(complex_grassmannian2(m));
  pairs.push_back(real_grassmannian4(4));
  for (const char* key : {"G2", "E6", "E7", "E8"}) pairs.push_back(space(key));

  for (const auto& p : pairs) {
    CAPTURE(p.name);
    std::set<std::vector<Rational>> noncompact;
    for (int idx : p.noncompact_positive)
      noncompact.insert(p.g.positive_roots[static_cast<std::size_t>(idx)].coords);
    for (const auto& entry : lambda_set(p).elements) {
      CHECK(entry.value.sign() < 0);
      CHECK(noncompact.count(entry.root.coords) > 0);
    }
  }
}

TEST_CASE("closed form decompositions") {
  const auto g2 = eigenvalue_closed(space("G2"));
  CHECK(g2.lambda_sq == Rational(3, 2));
  CHECK(g2.term_distance == Rational(1, 2));
  CHECK(g2.term_lambda == Rational(0));
  CHECK(g2.term_dim == Rational(1));

  const auto gr4 = eigenvalue_closed(real_grassmannian4(4));
  CHECK(gr4.lambda_sq == Rational(3));

  const auto e8 = eigenvalue_closed(space("E8"));
  CHECK(e8.lambda_sq == Rational(269, 15));
  CHECK(e8.term_distance == Rational(196, 15));
  CHECK(e8.term_lambda == Rational(-137, 15));
  CHECK(e8.term_dim == Rational(14));
  CHECK(e8.lambda_sq == e8.term_distance + e8.term_lambda + e8.term_dim);
  CHECK(e8.method == Method::closed_form);
}

TEST_CASE("term_lambda is never positive") {
  std::vector<SymmetricPair> pairs;
  for (long m : {1L, 3L, 5L}) pairs.push_back(quaternionic_projective(m));
  for (long m : {2L, 4L}) pairs.push_back(complex_grassmannian2(m));
  for (long m : {4L, 6L}) pairs.push_back(real_grassmannian4(m));
  for (const char* key : {"G2", "E6", "E7", "E8"}) pairs.push_back(space(key));
  for (const auto& p : pairs)
    CHECK(eigenvalue_closed(p).term_lambda.sign() <= 0);
}

TEST_CASE("spin gate") {
  const auto f4 = space("F4");
  CHECK_THROWS_AS(eigenvalue_closed(f4), NoSpinStructure);
  // forced: the formal value exists, is positive, and the oracle agrees with it
  const auto formal = eigenvalue_closed(f4, /*force=*/true);
  CHECK(formal.lambda_sq.sign() > 0);
  CHECK(eigenvalue_weyl_min(f4).lambda_sq == formal.lambda_sq);
}

TEST_CASE("oracle routes") {
  CHECK(eigenvalue_weyl_min(space("G2")).lambda_sq == Rational(3, 2));
  CHECK(eigenvalue_weyl_min(quaternionic_projective(2)).lambda_sq == Rational(5, 4));
  CHECK(eigenvalue_weyl_min(complex_grassmannian2(2)).lambda_sq == Rational(3, 2));
  CHECK(eigenvalue_restricted_w(space("G2")).lambda_sq == Rational(3, 2));
  CHECK(eigenvalue_spin_weights(quaternionic_projective(1)).lambda_sq == Rational(2, 3));
  CHECK(eigenvalue_weyl_min(space("G2")).method == Method::weyl_min);
}

TEST_CASE("route agreement on the small catalog") {
  std::vector<SymmetricPair> pairs;
  for (long m : {1L, 2L}) pairs.push_back(quaternionic_projective(m));
  pairs.push_back(complex_grassmannian2(2));
  pairs.push_back(real_grassmannian4(4));
  pairs.push_back(space("G2"));
  for (const auto& p : pairs) {
    CAPTURE(p.name);
    const auto closed = eigenvalue_closed(p).lambda_sq;
    CHECK(eigenvalue_weyl_min(p).lambda_sq == closed);
    CHECK(eigenvalue_restricted_w(p).lambda_sq == closed);
    CHECK(eigenvalue_spin_weights(p).lambda_sq == closed);
  }
}

TEST_CASE("spin highest weights") {
  const auto p = quaternionic_projective(1);
  const auto weights = spin_highest_weights(p);
  // delta_n itself appears (w = id)
  CHECK(std::count(weights.begin(), weights.end(), p.delta_n()) == 1);
  // minimum of 2 ||beta||^2 + n/8 over the weights equals lambda^2
  Rational best = norm_sq(p.g.form, weights.front());
  for (const auto& b : weights) best = std::min(best, norm_sq(p.g.form, b));
  CHECK(Rational(2) * best + Rational(p.n, 8) == Rational(2, 3));
}

TEST_CASE("restricted subset agrees with the literal inclusion test") {
  std::vector<SymmetricPair> pairs = {quaternionic_projective(1),
                                      complex_grassmannian2(2), space("G2")};
  const auto c3 = killing_normalize(build_root_system(Family::C, 3)).system;
  pairs.push_back(pair_from_marked_node(c3, 2));

  for (const auto& p : pairs) {
    CAPTURE(p.name);
    // pairing criterion, recomputed here exactly as the contract states it
    const auto pairing_member = [&](const WeightVec& point) {
      return std::all_of(p.k_positive.begin(), p.k_positive.end(), [&](int idx) {
        return inner(p.g.form, point, p.g.positive_roots[static_cast<std::size_t>(idx)])
                   .sign() > 0;
      });
    };
    std::size_t members = 0;
    for (const auto& el : orbit(p.g, p.g.weyl_vector, 10000)) {
      const bool by_pairing = pairing_member(el.point);
      const bool by_inclusion = contains_k_roots(p, el.word);
      CHECK(by_pairing == by_inclusion);
      if (by_pairing) ++members;
    }
    // the identity always belongs
    CHECK(members >= 1);
    CHECK(members == spin_highest_weights(p).size());
  }
}

TEST_CASE("restricted weights are K-dominant") {
  for (const auto& p : {quaternionic_projective(2), complex_grassmannian2(2),
                        space("G2"), real_grassmannian4(4)}) {
    CAPTURE(p.name);
    const auto k_simple = k_simple_roots(p);
    for (const auto& beta : spin_highest_weights(p))
      for (const auto& alpha : k_simple)
        CHECK(inner(p.g.form, beta, alpha).sign() >= 0);
  }
}

TEST_CASE("lambda lemma") {
  for (long m : {1L, 2L, 3L}) {
    const auto p = quaternionic_projective(m);
    const auto rep = verify_lambda_lemma(p);
    CHECK(rep.holds);
    // Lambda is empty here, so both sides are <delta_G, delta_K>
    CHECK(rep.orbit_max == inner(p.g.form, p.g.weyl_vector, p.delta_k));
  }
  const auto e6 = space("E6");
  const auto rep6 = verify_lambda_lemma(e6);
  CHECK(rep6.holds);
  CHECK(rep6.lambda_rhs ==
        inner(e6.g.form, e6.g.weyl_vector, e6.delta_k) + Rational(7, 12));
  CHECK(verify_lambda_lemma(space("G2")).holds);
}

TEST_CASE("degenerate and infeasible inputs") {
  // |W(E7)| = 2,903,040 and |W(E8)| ~ 6.96e8 both blow any desk-size cap
  CHECK_THROWS_AS(eigenvalue_weyl_min(space("E8"), 200'000), OrbitCapExceeded);
  CHECK_THROWS_AS(eigenvalue_weyl_min(space("E7"), 200'000), OrbitCapExceeded);

  // a hand-built pair with no noncompact roots never reaches the formula
  auto rs = build_root_system(Family::A, 2);
  SymmetricPair degenerate;
  degenerate.g = rs;
  degenerate.delta_k = rs.weyl_vector;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    degenerate.k_positive.push_back(static_cast<int>(i));
  degenerate.name = "A2/A2";
  degenerate.spin = true;
  CHECK_THROWS_AS(eigenvalue_closed(degenerate), InvalidPair);
}
