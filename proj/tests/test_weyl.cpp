#include <doctest.h>

#include "diraceig/dirac.hpp"
#include "diraceig/symmetric_space.hpp"
#include "diraceig/weyl.hpp"

#include <algorithm>
#include <set>

using namespace diraceig;

TEST_CASE("reflect basics") {
  const auto rs = build_root_system(Family::G2);
  for (int i = 0; i < rs.rank; ++i) {
    // s_i delta = delta - alpha_i
    CHECK(reflect(rs, i, rs.weyl_vector) == rs.weyl_vector - rs.simple_roots[i]);
    CHECK(reflect(rs, i, rs.simple_roots[i]) == -rs.simple_roots[i]);
    // involution
    CHECK(reflect(rs, i, reflect(rs, i, rs.weyl_vector)) == rs.weyl_vector);
  }
  CHECK_THROWS_AS(reflect(rs, 2, rs.weyl_vector), std::out_of_range);
  CHECK_THROWS_AS(reflect(rs, -1, rs.weyl_vector), std::out_of_range);
}

TEST_CASE("orbit sizes match the group orders") {
  struct Case {
    Family family;
    int rank;
    std::size_t order;
  };
  // |W|: G2 = 12, C_n = 2^n n!, A_n = (n+1)!, B3 = 48, D4 = 192
  for (const auto& c : {Case{Family::G2, 2, 12}, Case{Family::C, 2, 8},
                        Case{Family::C, 3, 48}, Case{Family::A, 3, 24},
                        Case{Family::B, 3, 48}, Case{Family::D, 4, 192}}) {
    const auto rs = build_root_system(c.family, c.rank);
    const auto elements = orbit(rs, rs.weyl_vector, 1000);
    CHECK(elements.size() == c.order);
  }
}

TEST_CASE("orbit of a fixed point and the cap") {
  const auto rs = build_root_system(Family::C, 3);
  CHECK(orbit(rs, WeightVec::zero(rs.basis), 10).size() == 1);
  try {
    orbit(rs, rs.weyl_vector, 5);
    FAIL("expected OrbitCapExceeded");
  } catch (const OrbitCapExceeded& e) {
    CHECK(e.cap() == 5);
  }
  // cap equal to the orbit size is fine
  CHECK(orbit(rs, rs.weyl_vector, 48).size() == 48);
}

TEST_CASE("witness words reproduce their points and preserve the norm") {
  for (auto [family, rank] : {std::pair{Family::G2, 2}, {Family::C, 3}}) {
    const auto rs = build_root_system(family, rank);
    const Rational seed_norm = norm_sq(rs.form, rs.weyl_vector);
    for (const auto& el : orbit(rs, rs.weyl_vector, 1000)) {
      CHECK(apply_word(rs, el.word, rs.weyl_vector) == el.point);
      CHECK(norm_sq(rs.form, el.point) == seed_norm);
    }
  }
}

TEST_CASE("orbit enumeration is deterministic") {
  const auto rs = build_root_system(Family::C, 3);
  const auto a = orbit(rs, rs.weyl_vector, 1000);
  const auto b = orbit(rs, rs.weyl_vector, 1000);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].point == b[i].point);
    CHECK(a[i].word.letters == b[i].word.letters);
  }
}

TEST_CASE("inversion sets") {
  const auto rs = build_root_system(Family::G2);

  CHECK(inversion_set(rs, ReducedWord{}).empty());
  const auto single = inversion_set(rs, ReducedWord{{1}});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == rs.simple_roots[1]);

  CHECK_THROWS_AS(inversion_set(rs, ReducedWord{{0, 0}}), NonReducedWord);
  CHECK_THROWS_AS(inversion_set(rs, ReducedWord{{0, 1, 0, 0}}), NonReducedWord);
  CHECK_THROWS_AS(inversion_set(rs, ReducedWord{{7}}), std::out_of_range);

  // the longest element sends delta to -delta; its inversion set is all of Phi+
  const auto elements = orbit(rs, rs.weyl_vector, 100);
  const auto longest =
      std::find_if(elements.begin(), elements.end(),
                   [&](const OrbitElement& el) { return el.point == -rs.weyl_vector; });
  REQUIRE(longest != elements.end());
  CHECK(longest->word.letters.size() == 6);
  const auto inv = inversion_set(rs, longest->word);
  CHECK(inv.size() == 6);
  for (const auto& theta : rs.positive_roots)
    CHECK(std::count(inv.begin(), inv.end(), theta) == 1);
}

TEST_CASE("inversion-set identity over full orbits") {
  for (auto [family, rank] : {std::pair{Family::G2, 2}, {Family::C, 2},
                              {Family::C, 3}, {Family::A, 3}}) {
    const auto rs = build_root_system(family, rank);
    for (const auto& el : orbit(rs, rs.weyl_vector, 1000)) {
      const auto inv = inversion_set(rs, el.word);  // distinct positive or it throws
      CHECK(inv.size() == el.word.letters.size());
      WeightVec sum = WeightVec::zero(rs.basis);
      for (const auto& root : inv) sum = sum + root;
      CHECK(sum == rs.weyl_vector - el.point);
    }
  }
}

TEST_CASE("min distance over an orbit") {
  const auto g2 = make_space(*find_catalog_entry("G2"), std::nullopt);
  CHECK(min_dist_over_orbit(g2.g, g2.g.weyl_vector, g2.g.weyl_vector, 100).value ==
        Rational(0));
  // the minimum is attained at the identity for this pair
  const auto ext = min_dist_over_orbit(g2.g, g2.g.weyl_vector, g2.delta_k, 100);
  CHECK(ext.value == Rational(1, 4));
  CHECK(ext.witness.word.letters.empty());

  const auto gr4 = real_grassmannian4(4);
  CHECK(min_dist_over_orbit(gr4.g, gr4.g.weyl_vector, gr4.delta_k, 1000).value ==
        Rational(1, 2));
}

TEST_CASE("max inner over an orbit") {
  const auto g2 = make_space(*find_catalog_entry("G2"), std::nullopt);
  CHECK(max_inner_over_orbit(g2.g, g2.g.weyl_vector, WeightVec::zero(g2.g.basis), 100)
            .value == Rational(0));
  CHECK(max_inner_over_orbit(g2.g, g2.g.weyl_vector, g2.delta_k, 100).value ==
        inner(g2.g.form, g2.g.weyl_vector, g2.delta_k));

  const auto e6 = make_space(*find_catalog_entry("E6"), std::nullopt);
  const auto ext = max_inner_over_orbit(e6.g, e6.g.weyl_vector, e6.delta_k, 60000);
  CHECK(ext.value ==
        inner(e6.g.form, e6.g.weyl_vector, e6.delta_k) + Rational(7, 12));
}

TEST_CASE("orbit seed must share the basis") {
  const auto g2 = build_root_system(Family::G2);
  const auto c2 = quaternionic_projective(1).g;
  CHECK_THROWS_AS(orbit(g2, c2.weyl_vector, 100), BasisMismatch);
}
