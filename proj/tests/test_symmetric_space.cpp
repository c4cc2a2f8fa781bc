#include <doctest.h>

#include "diraceig/dirac.hpp"
#include "diraceig/symmetric_space.hpp"

#include <algorithm>

using namespace diraceig;

namespace {

std::vector<Rational> coords_of(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.push_back(Rational(v));
  return out;
}

}  // namespace

TEST_CASE("quaternionic projective spaces") {
  const auto p2 = quaternionic_projective(2);
  CHECK(p2.name == "HP^2");
  CHECK(p2.g.weyl_vector.coords == coords_of({3, 2, 1}));
  CHECK(p2.delta_k.coords == coords_of({2, 1, 1}));
  CHECK(norm_sq(p2.g.form, p2.delta_n()) == Rational(1, 8));
  CHECK(p2.spin);
  CHECK(p2.spin_unique);

  const auto p1 = quaternionic_projective(1);
  CHECK(p1.n == 4);
  CHECK(p1.noncompact_positive.size() == 2);

  for (long m : {1L, 2L, 3L, 4L, 5L}) {
    const auto p = quaternionic_projective(m);
    CHECK(p.n == 4 * m);
    // delta_G - delta_K = (1, ..., 1, 0)
    std::vector<Rational> want(static_cast<std::size_t>(m + 1), Rational(1));
    want.back() = Rational(0);
    CHECK(p.delta_n().coords == want);
  }
  CHECK_THROWS_AS(quaternionic_projective(0), std::invalid_argument);
}

TEST_CASE("complex 2-plane Grassmannians") {
  const auto p2 = complex_grassmannian2(2);
  CHECK(p2.g.weyl_vector.coords == coords_of({3, 2, 1}));
  CHECK(p2.delta_k.coords == coords_of({1, 0, 1}));
  CHECK(p2.n == 8);

  for (long m : {2L, 4L, 6L}) {
    const auto p = complex_grassmannian2(m);
    CHECK(p.n == 4 * m);
    CHECK(norm_sq(p.g.form, p.delta_n()) == Rational(m, 4));
    CHECK(p.spin);
  }

  CHECK_THROWS_AS(complex_grassmannian2(3), NoSpinStructure);
  CHECK_THROWS_AS(complex_grassmannian2(1), std::invalid_argument);

  // forcing an odd m yields the formal pair with spin = false
  const auto forced = complex_grassmannian2(3, /*force=*/true);
  CHECK_FALSE(forced.spin);
  CHECK(forced.n == 12);
}

TEST_CASE("oriented real 4-plane Grassmannians") {
  const auto p4 = real_grassmannian4(4);
  CHECK(p4.delta_k.coords == coords_of({1, 0, 1, 0}));
  CHECK(p4.n == 16);

  for (long m : {4L, 6L, 8L}) {
    const auto p = real_grassmannian4(m);
    CHECK(p.n == 4 * m);
    CHECK(norm_sq(p.g.form, p.delta_n()) == Rational(m, m + 2));
    CHECK(lambda_set(p).size() == 1);
    // delta_G - delta_K = 2 (1, ..., 1, 0, 0) with m/2 ones
    std::vector<Rational> want(static_cast<std::size_t>(m / 2 + 2), Rational(2));
    want[want.size() - 1] = Rational(0);
    want[want.size() - 2] = Rational(0);
    CHECK(p.delta_n().coords == want);
  }

  CHECK_THROWS_AS(real_grassmannian4(5), NoSpinStructure);
  CHECK_THROWS_AS(real_grassmannian4(2), std::invalid_argument);
}

TEST_CASE("marked-node recipe on G2") {
  const auto rs = killing_normalize(build_root_system(Family::G2)).system;
  const auto p = pair_from_marked_node(rs, 1);
  REQUIRE(p.k_positive.size() == 2);
  // Phi_K+ = {2a1 + 3a2, a2}
  std::vector<std::vector<long>> k_coeffs;
  for (int idx : p.k_positive) k_coeffs.push_back(rs.positive_coeffs[idx]);
  std::sort(k_coeffs.begin(), k_coeffs.end());
  CHECK(k_coeffs == std::vector<std::vector<long>>{{0, 1}, {2, 3}});
  CHECK(p.delta_k.coords == coords_of({1, 2}));  // a1 + 2 a2
  CHECK(p.n == 8);

  // node 2 carries highest-root coefficient 3
  CHECK_THROWS_AS(pair_from_marked_node(rs, 2), NodeNotOrderTwo);
  CHECK_THROWS_AS(pair_from_marked_node(rs, 0), std::out_of_range);
  CHECK_THROWS_AS(pair_from_marked_node(rs, 3), std::out_of_range);
}

TEST_CASE("marked-node recipe on E6, E7, E8") {
  const auto e6 = killing_normalize(build_root_system(Family::E6)).system;
  const auto p6 = pair_from_marked_node(e6, 6);
  CHECK(Rational(2) * p6.delta_k == WeightVec{coords_of({6, 10, 12, 10, 6, 2}), e6.basis});
  CHECK(p6.n == 40);

  const auto e7 = killing_normalize(build_root_system(Family::E7)).system;
  const auto p7 = pair_from_marked_node(e7, 1);
  CHECK(p7.n == 64);
  // delta_G - delta_K = 8 omega_1
  const auto omega = fundamental_weights(e7);
  CHECK(p7.delta_n() == Rational(8) * omega[0]);
  CHECK(p7.delta_n().coords ==
        std::vector<Rational>{16, 24, 32, 24, 16, 8, 16});

  const auto e8 = killing_normalize(build_root_system(Family::E8)).system;
  const auto p8 = pair_from_marked_node(e8, 1);
  CHECK(p8.k_positive.size() == 64);
  CHECK(p8.n == 112);

  // strict mode rejects a coefficient-1 node; the relaxed policy accepts it
  const auto a3 = killing_normalize(build_root_system(Family::A, 3)).system;
  CHECK_THROWS_AS(pair_from_marked_node(a3, 2), NodeNotOrderTwo);
  const auto hermitian = pair_from_marked_node(a3, 2, NodeMark::allow_one_or_two);
  CHECK(hermitian.n == 8);
}

TEST_CASE("pair invariants") {
  std::vector<SymmetricPair> pairs;
  for (long m : {1L, 2L, 3L}) pairs.push_back(quaternionic_projective(m));
  pairs.push_back(complex_grassmannian2(2));
  pairs.push_back(real_grassmannian4(4));
  for (const char* key : {"G2", "F4", "E6", "E7", "E8"})
    pairs.push_back(make_space(*find_catalog_entry(key), std::nullopt));

  for (const auto& p : pairs) {
    CAPTURE(p.name);
    // delta_K is half the sum of the K-positive roots
    WeightVec sum = WeightVec::zero(p.g.basis);
    for (int idx : p.k_positive) sum = sum + p.g.positive_roots[idx];
    CHECK(p.delta_k == Rational(1, 2) * sum);
    // delta_n is half the sum of the noncompact positive roots
    WeightVec nsum = WeightVec::zero(p.g.basis);
    for (int idx : p.noncompact_positive) nsum = nsum + p.g.positive_roots[idx];
    CHECK(p.delta_n() == Rational(1, 2) * nsum);
    CHECK(p.n == 2 * static_cast<long>(p.noncompact_positive.size()));
    // K-simple roots pair positively with delta_K
    for (const auto& alpha : k_simple_roots(p))
      CHECK(inner(p.g.form, alpha, p.delta_k).sign() > 0);
  }
}

TEST_CASE("rejects K = G") {
  auto rs = build_root_system(Family::A, 2);
  std::vector<int> all(rs.positive_roots.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  CHECK_THROWS_AS(make_symmetric_pair(rs, all, "degenerate", true, true), InvalidPair);
}

TEST_CASE("scalar curvature") {
  CHECK(scalar_curvature(quaternionic_projective(2)) == Rational(4));  // Scal/4 = m/2
  const auto g2 = make_space(*find_catalog_entry("G2"), std::nullopt);
  CHECK(scalar_curvature(g2) == Rational(4));
  const auto r = eigenvalue_closed(g2);
  CHECK(r.lambda_sq == Rational(3, 2) * (scalar_curvature(g2) / Rational(4)));
  const auto e8 = make_space(*find_catalog_entry("E8"), std::nullopt);
  CHECK(scalar_curvature(e8) / Rational(4) == Rational(14));
  CHECK(eigenvalue_closed(e8).lambda_sq / Rational(14) == Rational(269, 210));
}

TEST_CASE("catalog") {
  const auto& entries = catalog();
  REQUIRE(entries.size() == 8);

  const auto* e7 = find_catalog_entry("E7");
  REQUIRE(e7 != nullptr);
  CHECK(e7->name == "E7/(Spin12 SU2)");
  CHECK(e7->fixed_dim == 64);
  CHECK(e7->spin);
  CHECK(e7->spin_unique);
  CHECK(e7->expected_lambda_sq->eval(0) == Rational(95, 9));

  const auto* f4 = find_catalog_entry("F4");
  REQUIRE(f4 != nullptr);
  CHECK(f4->name == "F4/(Sp3 SU2)");
  CHECK(f4->fixed_dim == 28);
  CHECK_FALSE(f4->spin);
  CHECK_FALSE(f4->expected_lambda_sq.has_value());

  const auto* hp = find_catalog_entry("HP");
  REQUIRE(hp != nullptr);
  CHECK(hp->parameterized);
  CHECK(hp->expected_lambda_sq->eval(1) == Rational(2, 3));
  CHECK(hp->expected_lambda_sq->eval(2) == Rational(5, 4));
  CHECK(hp->expected_lambda_sq->eval(12) == Rational(45, 7));

  CHECK(find_catalog_entry("gr2") != nullptr);  // keys are case-insensitive
  CHECK(find_catalog_entry("E7/(Spin12 SU2)") == e7);
  CHECK(find_catalog_entry("nope") == nullptr);

  // catalog dimensions match the constructed pairs
  for (const auto& e : entries) {
    const std::optional<long> m =
        e.parameterized ? std::optional<long>(e.min_m) : std::nullopt;
    const auto p = make_space(e, m, /*force=*/true);
    CHECK(p.n == e.dim(m.value_or(0)));
  }

  CHECK_THROWS_AS(make_space(*hp, std::nullopt), UnknownSpace);
  CHECK_THROWS_AS(make_space(*hp, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_space(*e7, 3), std::invalid_argument);
}

TEST_CASE("candidate nodes") {
  // C3 highest root has coefficients (2, 2, 1)
  CHECK(candidate_nodes(build_root_system(Family::C, 3)) == std::vector<int>{1, 2});
  // A3 has none of coefficient 2, so the coefficient-1 nodes are offered
  CHECK(candidate_nodes(build_root_system(Family::A, 3)) == std::vector<int>{1, 2, 3});
  // G2 highest root is 2 a1 + 3 a2
  CHECK(candidate_nodes(build_root_system(Family::G2)) == std::vector<int>{1});
}
