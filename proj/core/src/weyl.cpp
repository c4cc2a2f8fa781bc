#include "diraceig/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace diraceig {

namespace {

constexpr std::int64_t kCoordLimit = std::int64_t(1) << 40;
constexpr std::uint32_t kEmptySlot = 0xffffffffu;

std::uint64_t hash_raw(const std::int64_t* p, int d) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (int k = 0; k < d; ++k) {
    std::uint64_t x = static_cast<std::uint64_t>(p[k]);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::int64_t to_int64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw Error(std::string(what) + ": value exceeds 64-bit range");
  return z.get_si();
}

}  // namespace

WeightVec reflect(const RootSystem& rs, int i, const WeightVec& v) {
  if (i < 0 || i >= rs.rank)
    throw std::out_of_range("reflect: simple-root index out of range");
  const WeightVec& alpha = rs.simple_roots[static_cast<std::size_t>(i)];
  const Rational c = Rational(2) * inner(rs.form, v, alpha) / norm_sq(rs.form, alpha);
  return v - c * alpha;
}

WeightVec apply_word(const RootSystem& rs, const ReducedWord& word, const WeightVec& v) {
  WeightVec out = v;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = reflect(rs, *it, out);
  return out;
}

OrbitIndex OrbitIndex::build(const RootSystem& rs, const WeightVec& seed, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("orbit cap must be >= 1");
  if (!(seed.basis == rs.basis))
    throw BasisMismatch("orbit seed not expressed in the system basis");

  OrbitIndex oi;
  const int d = rs.basis.ambient_dim;
  oi.dim_ = d;
  oi.basis_ = rs.basis;

  for (const auto& c : seed.coords)
    mpz_lcm(oi.denom_.get_mpz_t(), oi.denom_.get_mpz_t(), c.den().get_mpz_t());

  std::vector<std::int64_t> start(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const Rational scaled =
        seed.coords[static_cast<std::size_t>(k)] * Rational(oi.denom_, 1);
    start[static_cast<std::size_t>(k)] = to_int64(scaled.num(), "orbit seed");
  }

  // Integer matrices of the simple reflections. <e_k, a^vee> is integral for
  // the basis vectors of every supported chart, which keeps the scaled
  // lattice closed under the walk.
  const int r = rs.rank;
  std::vector<std::int64_t> refl(static_cast<std::size_t>(r) * d * d);
  for (int i = 0; i < r; ++i) {
    for (int col = 0; col < d; ++col) {
      WeightVec e = WeightVec::zero(rs.basis);
      e.coords[static_cast<std::size_t>(col)] = 1;
      const WeightVec img = reflect(rs, i, e);
      for (int row = 0; row < d; ++row) {
        const Rational& x = img.coords[static_cast<std::size_t>(row)];
        if (!x.is_integer())
          throw Error("orbit enumeration needs integral simple reflections in this basis");
        refl[(static_cast<std::size_t>(i) * d + row) * d + col] =
            to_int64(x.num(), "reflection matrix");
      }
    }
  }

  // open-addressed set of pool indices keyed by the point coordinates
  std::size_t slot_count = 1u << 10;
  std::vector<std::uint32_t> slots(slot_count, kEmptySlot);
  const auto probe = [&](const std::int64_t* p) -> std::size_t {
    std::size_t pos = hash_raw(p, d) & (slot_count - 1);
    while (slots[pos] != kEmptySlot) {
      const std::int64_t* q = oi.pool_.data() + slots[pos] * static_cast<std::size_t>(d);
      if (std::memcmp(q, p, sizeof(std::int64_t) * static_cast<std::size_t>(d)) == 0)
        return pos;
      pos = (pos + 1) & (slot_count - 1);
    }
    return pos;
  };
  const auto grow = [&]() {
    slot_count *= 2;
    slots.assign(slot_count, kEmptySlot);
    for (std::uint32_t idx = 0; idx < oi.count_; ++idx) {
      const std::int64_t* p = oi.pool_.data() + idx * static_cast<std::size_t>(d);
      std::size_t pos = hash_raw(p, d) & (slot_count - 1);
      while (slots[pos] != kEmptySlot) pos = (pos + 1) & (slot_count - 1);
      slots[pos] = idx;
    }
  };
  const auto insert = [&](const std::int64_t* p, std::uint32_t parent,
                          std::uint8_t letter) -> bool {
    if (10 * (oi.count_ + 1) > 7 * slot_count) grow();
    const std::size_t pos = probe(p);
    if (slots[pos] != kEmptySlot) return false;
    if (oi.count_ == cap) throw OrbitCapExceeded(cap);
    slots[pos] = static_cast<std::uint32_t>(oi.count_);
    oi.pool_.insert(oi.pool_.end(), p, p + d);
    oi.parent_.push_back(parent);
    oi.letter_.push_back(letter);
    ++oi.count_;
    return true;
  };

  insert(start.data(), 0, 0);

  std::vector<std::int64_t> src(static_cast<std::size_t>(d));
  std::vector<std::int64_t> dst(static_cast<std::size_t>(d));
  for (std::size_t idx = 0; idx < oi.count_; ++idx) {
    // copy: the pool may reallocate while neighbors are appended
    std::copy_n(oi.pool_.data() + idx * static_cast<std::size_t>(d), d, src.data());
    for (int i = 0; i < r; ++i) {
      const std::int64_t* m = refl.data() + static_cast<std::size_t>(i) * d * d;
      for (int row = 0; row < d; ++row) {
        std::int64_t acc = 0;
        for (int col = 0; col < d; ++col)
          acc += m[row * d + col] * src[static_cast<std::size_t>(col)];
        if (acc > kCoordLimit || acc < -kCoordLimit)
          throw Error("orbit coordinates exceed engine bounds");
        dst[static_cast<std::size_t>(row)] = acc;
      }
      insert(dst.data(), static_cast<std::uint32_t>(idx), static_cast<std::uint8_t>(i));
    }
  }
  return oi;
}

WeightVec OrbitIndex::point(std::size_t idx) const {
  WeightVec v = WeightVec::zero(basis_);
  const auto p = raw(idx);
  for (int k = 0; k < dim_; ++k)
    v.coords[static_cast<std::size_t>(k)] =
        Rational(mpz_class(static_cast<long>(p[static_cast<std::size_t>(k)])), denom_);
  return v;
}

ReducedWord OrbitIndex::word(std::size_t idx) const {
  ReducedWord w;
  while (idx != 0) {
    w.letters.push_back(letter_[idx]);
    idx = parent_[idx];
  }
  return w;
}

std::vector<OrbitElement> orbit(const RootSystem& rs, const WeightVec& seed,
                                std::size_t cap) {
  const OrbitIndex oi = OrbitIndex::build(rs, seed, cap);
  std::vector<OrbitElement> out;
  out.reserve(oi.size());
  for (std::size_t i = 0; i < oi.size(); ++i) out.push_back({oi.point(i), oi.word(i)});
  return out;
}

std::vector<WeightVec> inversion_set(const RootSystem& rs, const ReducedWord& word) {
  std::vector<WeightVec> out;
  out.reserve(word.letters.size());
  for (std::size_t j = 0; j < word.letters.size(); ++j) {
    const int lj = word.letters[j];
    if (lj < 0 || lj >= rs.rank)
      throw std::out_of_range("inversion_set: letter out of range");
    WeightVec v = rs.simple_roots[static_cast<std::size_t>(lj)];
    for (std::size_t t = j; t-- > 0;) v = reflect(rs, word.letters[t], v);
    if (!find_positive_root(rs, v)) {
      if (find_positive_root(rs, -v))
        throw NonReducedWord("word is not reduced: inversion root came out negative");
      throw Error("inversion_set: reflection produced a non-root");
    }
    if (std::find(out.begin(), out.end(), v) != out.end())
      throw NonReducedWord("word is not reduced: repeated inversion root");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::int64_t> scaled_functional(const RootSystem& rs, const WeightVec& target) {
  if (!(target.basis == rs.basis))
    throw BasisMismatch("functional target not in the system basis");
  const std::size_t d = static_cast<std::size_t>(rs.basis.ambient_dim);
  std::vector<Rational> row(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) row[i] += rs.form.gram[i][j] * target.coords[j];
  mpz_class den = 1;
  for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.den().get_mpz_t());
  std::vector<std::int64_t> f(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Rational scaled = row[i] * Rational(den, 1);
    f[i] = to_int64(scaled.num(), "scaled functional");
    if (f[i] > kCoordLimit || f[i] < -kCoordLimit)
      throw Error("functional coefficients exceed engine bounds");
  }
  return f;
}

namespace {

std::size_t argmax_inner(const OrbitIndex& oi, const std::vector<std::int64_t>& f) {
  std::size_t best = 0;
  __int128 best_dot = detail::raw_dot(oi.raw(0), f);
  for (std::size_t i = 1; i < oi.size(); ++i) {
    const __int128 dot = detail::raw_dot(oi.raw(i), f);
    if (dot > best_dot) {
      best_dot = dot;
      best = i;
    }
  }
  return best;
}

}  // namespace

OrbitExtremum max_inner_over_orbit(const RootSystem& rs, const WeightVec& seed,
                                   const WeightVec& target, std::size_t cap) {
  const OrbitIndex oi = OrbitIndex::build(rs, seed, cap);
  const auto f = scaled_functional(rs, target);
  const std::size_t best = argmax_inner(oi, f);
  const WeightVec pt = oi.point(best);
  return {inner(rs.form, pt, target), {pt, oi.word(best)}};
}

OrbitExtremum min_dist_over_orbit(const RootSystem& rs, const WeightVec& seed,
                                  const WeightVec& target, std::size_t cap) {
  // ||w s - t||^2 = ||s||^2 + ||t||^2 - 2 <w s, t>: minimize by maximizing the pairing
  const OrbitIndex oi = OrbitIndex::build(rs, seed, cap);
  const auto f = scaled_functional(rs, target);
  const std::size_t best = argmax_inner(oi, f);
  const WeightVec pt = oi.point(best);
  return {norm_sq(rs.form, pt - target), {pt, oi.word(best)}};
}

}  // namespace diraceig
