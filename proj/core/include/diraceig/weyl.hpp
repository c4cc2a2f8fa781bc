#pragma once

#include "diraceig/root_system.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace diraceig {

/// Word in the simple reflections. Letters are simple-root indices; the word
/// acts right to left, so {i, j} means s_i composed with s_j.
struct ReducedWord {
  std::vector<int> letters;
};

struct OrbitElement {
  WeightVec point;
  ReducedWord word;  // witness: point = word applied to the orbit seed
};

/// Reflection across the hyperplane of the i-th simple root.
WeightVec reflect(const RootSystem& rs, int i, const WeightVec& v);

WeightVec apply_word(const RootSystem& rs, const ReducedWord& word, const WeightVec& v);

/// Full Weyl orbit of the seed in deterministic breadth-first order, each
/// element with one shortest (hence reduced) witness word. Throws
/// OrbitCapExceeded once the orbit grows past cap.
std::vector<OrbitElement> orbit(const RootSystem& rs, const WeightVec& seed,
                                std::size_t cap);

/// Roots s_{i1}...s_{i(j-1)}(a_{ij}) for j = 1..k. For a reduced word these
/// are distinct positive roots and sum to delta - w delta; otherwise
/// NonReducedWord is thrown at the first negative or repeated root.
std::vector<WeightVec> inversion_set(const RootSystem& rs, const ReducedWord& word);

struct OrbitExtremum {
  Rational value;
  OrbitElement witness;
};

/// Exact min over the orbit of ||w seed - target||^2 with one minimizer.
OrbitExtremum min_dist_over_orbit(const RootSystem& rs, const WeightVec& seed,
                                  const WeightVec& target, std::size_t cap);

/// Exact max over the orbit of <w seed, target> with one maximizer.
OrbitExtremum max_inner_over_orbit(const RootSystem& rs, const WeightVec& seed,
                                   const WeightVec& target, std::size_t cap);

/// Flat denominator-cleared enumeration of a Weyl orbit. Coordinates are kept
/// as int64 (the simple reflections act integrally on every chart this library
/// builds), so large orbits stay cheap; exact values are recomputed from the
/// winning elements only.
class OrbitIndex {
public:
  static OrbitIndex build(const RootSystem& rs, const WeightVec& seed, std::size_t cap);

  std::size_t size() const { return count_; }
  int dim() const { return dim_; }

  /// Scaled coordinates; the actual point is raw(idx) / denominator().
  std::span<const std::int64_t> raw(std::size_t idx) const {
    return {pool_.data() + idx * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }
  const mpz_class& denominator() const { return denom_; }

  WeightVec point(std::size_t idx) const;
  ReducedWord word(std::size_t idx) const;

private:
  OrbitIndex() = default;
  int dim_ = 0;
  std::size_t count_ = 0;
  BasisTag basis_;
  mpz_class denom_ = 1;
  std::vector<std::int64_t> pool_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> letter_;
};

/// Integer functional representing v -> <v, target> on raw orbit coordinates
/// up to a positive factor; exact for sign tests and order comparisons.
std::vector<std::int64_t> scaled_functional(const RootSystem& rs, const WeightVec& target);

namespace detail {

inline __int128 raw_dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  __int128 acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    acc += static_cast<__int128>(a[k]) * b[k];
  return acc;
}

}  // namespace detail

}  // namespace diraceig
