#include "diraceig/root_system.hpp"

#include <algorithm>
#include <utility>

namespace diraceig {

namespace {

constexpr int kMaxRank = 24;
constexpr std::size_t kMaxRoots = 4096;

long to_long(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw Error(std::string(what) + ": value exceeds machine range");
  return z.get_si();
}

struct CartanData {
  std::vector<std::vector<long>> cartan;  // C[i][j] = 2 (a_i, a_j) / (a_j, a_j)
  std::vector<Rational> half_len;         // (a_i, a_i) / 2; long roots have 1
};

std::vector<std::vector<long>> chain(int n) {
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  return c;
}

// chain over nodes 0..n-2 with node n-1 attached at `attach`
std::vector<std::vector<long>> chain_with_branch(int n, int attach) {
  auto c = chain(n);
  c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
  c[attach][n - 1] = c[n - 1][attach] = -1;
  return c;
}

CartanData cartan_data(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw UnsupportedSystem("family A requires rank >= 1");
      return {chain(rank), std::vector<Rational>(rank, 1)};
    case Family::B: {
      if (rank < 2) throw UnsupportedSystem("family B requires rank >= 2");
      auto c = chain(rank);
      c[rank - 2][rank - 1] = -2;  // last simple root short
      std::vector<Rational> d(rank, 1);
      d[rank - 1] = Rational(1, 2);
      return {std::move(c), std::move(d)};
    }
    case Family::C: {
      if (rank < 2) throw UnsupportedSystem("family C requires rank >= 2");
      auto c = chain(rank);
      c[rank - 1][rank - 2] = -2;  // last simple root long
      std::vector<Rational> d(rank, Rational(1, 2));
      d[rank - 1] = 1;
      return {std::move(c), std::move(d)};
    }
    case Family::D:
      if (rank < 3) throw UnsupportedSystem("family D requires rank >= 3");
      return {chain_with_branch(rank, rank - 3), std::vector<Rational>(rank, 1)};
    case Family::G2:
      if (rank != 2) throw UnsupportedSystem("G2 has rank 2");
      return {{{2, -3}, {-1, 2}}, {Rational(1), Rational(1, 3)}};
    case Family::F4: {
      if (rank != 4) throw UnsupportedSystem("F4 has rank 4");
      auto c = chain(4);
      c[1][2] = -2;  // double bond toward the short roots
      return {std::move(c), {1, 1, Rational(1, 2), Rational(1, 2)}};
    }
    case Family::E6:
      if (rank != 6) throw UnsupportedSystem("E6 has rank 6");
      return {chain_with_branch(6, 2), std::vector<Rational>(6, 1)};
    case Family::E7:
      if (rank != 7) throw UnsupportedSystem("E7 has rank 7");
      return {chain_with_branch(7, 2), std::vector<Rational>(7, 1)};
    case Family::E8:
      if (rank != 8) throw UnsupportedSystem("E8 has rank 8");
      return {chain_with_branch(8, 4), std::vector<Rational>(8, 1)};
  }
  throw UnsupportedSystem("unknown family");
}

bool is_exceptional(Family f) {
  return f == Family::G2 || f == Family::F4 || f == Family::E6 || f == Family::E7 ||
         f == Family::E8;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error("singular pairing matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "A") return Family::A;
  if (text == "B") return Family::B;
  if (text == "C") return Family::C;
  if (text == "D") return Family::D;
  if (text == "G2") return Family::G2;
  if (text == "F4") return Family::F4;
  if (text == "E6") return Family::E6;
  if (text == "E7") return Family::E7;
  if (text == "E8") return Family::E8;
  return std::nullopt;
}

std::string RootSystem::name() const {
  if (is_exceptional(family)) return family_name(family);
  return family_name(family) + std::to_string(rank);
}

RootSystem assemble_root_system(Family family, BasisTag basis,
                                std::vector<WeightVec> simple_roots, InnerForm form) {
  const int rank = static_cast<int>(simple_roots.size());
  if (rank < 1) throw UnsupportedSystem("no simple roots given");
  if (rank > basis.ambient_dim) throw UnsupportedSystem("rank exceeds ambient dimension");
  if (!(form.basis == basis)) throw BasisMismatch("form basis differs from system basis");
  for (const auto& a : simple_roots)
    if (!(a.basis == basis) ||
        a.coords.size() != static_cast<std::size_t>(basis.ambient_dim))
      throw BasisMismatch("simple root not expressed in the system basis");

  std::vector<Rational> alpha_sq(rank);
  for (int i = 0; i < rank; ++i) {
    alpha_sq[i] = norm_sq(form, simple_roots[i]);
    if (alpha_sq[i].sign() <= 0)
      throw UnsupportedSystem("simple root with nonpositive length");
  }

  // Closure under the simple reflections; coefficient vectors ride along so
  // positivity and height never need a linear solve.
  struct Entry {
    WeightVec vec;
    std::vector<long> coeff;
  };
  std::vector<Entry> roots;
  auto find = [&](const WeightVec& v) {
    for (const auto& e : roots)
      if (e.vec.coords == v.coords) return true;
    return false;
  };
  for (int i = 0; i < rank; ++i) {
    std::vector<long> unit(rank, 0);
    unit[i] = 1;
    roots.push_back({simple_roots[i], std::move(unit)});
  }

  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    if (roots.size() > kMaxRoots)
      throw UnsupportedSystem("reflection closure exceeds bound; not a finite root system");
    const Entry cur = roots[idx];  // copy: the vector may grow while we append
    for (int i = 0; i < rank; ++i) {
      const Rational c = Rational(2) * inner(form, cur.vec, simple_roots[i]) / alpha_sq[i];
      if (!c.is_integer())
        throw UnsupportedSystem("non-integral Cartan pairing between roots");
      if (c.is_zero()) continue;
      Entry next;
      next.vec = cur.vec - c * simple_roots[i];
      next.coeff = cur.coeff;
      next.coeff[static_cast<std::size_t>(i)] -= to_long(c.num(), "root coefficient");
      if (!find(next.vec)) roots.push_back(std::move(next));
    }
  }

  std::vector<Entry> positive;
  for (auto& e : roots) {
    const bool nonneg =
        std::all_of(e.coeff.begin(), e.coeff.end(), [](long c) { return c >= 0; });
    if (nonneg) positive.push_back(std::move(e));
  }
  if (2 * positive.size() != roots.size())
    throw UnsupportedSystem("root set is not symmetric; invalid simple roots");

  auto height = [](const std::vector<long>& c) {
    long h = 0;
    for (long x : c) h += x;
    return h;
  };
  std::sort(positive.begin(), positive.end(), [&](const Entry& a, const Entry& b) {
    const long ha = height(a.coeff), hb = height(b.coeff);
    if (ha != hb) return ha < hb;
    return a.coeff < b.coeff;
  });

  if (positive.size() >= 2 &&
      height(positive.back().coeff) == height(positive[positive.size() - 2].coeff))
    throw UnsupportedSystem("highest root not unique; system is reducible");

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.basis = basis;
  rs.simple_roots = std::move(simple_roots);
  rs.form = std::move(form);
  rs.highest_root = positive.back().vec;
  rs.weyl_vector = WeightVec::zero(basis);
  for (auto& e : positive) {
    rs.weyl_vector = rs.weyl_vector + e.vec;
    rs.positive_roots.push_back(std::move(e.vec));
    rs.positive_coeffs.push_back(std::move(e.coeff));
  }
  rs.weyl_vector = Rational(1, 2) * rs.weyl_vector;
  rs.dim_g = 2 * static_cast<long>(rs.positive_roots.size()) + rank;

  for (int i = 0; i < rank; ++i) {
    const Rational pairing =
        Rational(2) * inner(rs.form, rs.weyl_vector, rs.simple_roots[i]) / alpha_sq[i];
    if (pairing != Rational(1))
      throw UnsupportedSystem("Weyl vector fails <delta, a^vee> = 1; invalid input");
  }
  return rs;
}

RootSystem build_root_system(Family family, int rank) {
  if (rank > kMaxRank) throw UnsupportedSystem("rank above supported bound");
  CartanData cd = cartan_data(family, rank);

  const BasisTag tag{BasisKind::simple_root, rank};
  std::vector<WeightVec> simples;
  simples.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    WeightVec e = WeightVec::zero(tag);
    e.coords[static_cast<std::size_t>(i)] = 1;
    simples.push_back(std::move(e));
  }

  InnerForm form;
  form.basis = tag;
  form.gram.assign(static_cast<std::size_t>(rank),
                   std::vector<Rational>(static_cast<std::size_t>(rank)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      form.gram[i][j] = Rational(cd.cartan[i][j]) * cd.half_len[j];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < i; ++j)
      if (form.gram[i][j] != form.gram[j][i])
        throw UnsupportedSystem("asymmetric Cartan data");

  return assemble_root_system(family, tag, std::move(simples), std::move(form));
}

RootSystem build_root_system(Family family) {
  switch (family) {
    case Family::G2: return build_root_system(family, 2);
    case Family::F4: return build_root_system(family, 4);
    case Family::E6: return build_root_system(family, 6);
    case Family::E7: return build_root_system(family, 7);
    case Family::E8: return build_root_system(family, 8);
    default:
      throw UnsupportedSystem("classical families need an explicit rank");
  }
}

NormalizedSystem killing_normalize(const RootSystem& rs) {
  const Rational current = norm_sq(rs.form, rs.weyl_vector);
  const Rational scale = Rational(rs.dim_g, 24) / current;
  NormalizedSystem out{rs, scale};
  for (auto& row : out.system.form.gram)
    for (auto& g : row) g *= scale;
  return out;
}

std::vector<WeightVec> fundamental_weights(const RootSystem& rs) {
  const std::size_t r = static_cast<std::size_t>(rs.rank);
  std::vector<std::vector<Rational>> pairing(r, std::vector<Rational>(r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j)
      pairing[k][j] = Rational(2) * inner(rs.form, rs.simple_roots[k], rs.simple_roots[j]) /
                      norm_sq(rs.form, rs.simple_roots[j]);
  const auto m = invert(std::move(pairing));  // omega_i = sum_k m[i][k] alpha_k
  std::vector<WeightVec> omegas;
  omegas.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    WeightVec w = WeightVec::zero(rs.basis);
    for (std::size_t k = 0; k < r; ++k) w = w + m[i][k] * rs.simple_roots[k];
    omegas.push_back(std::move(w));
  }
  return omegas;
}

std::optional<int> find_positive_root(const RootSystem& rs, const WeightVec& v) {
  if (!(v.basis == rs.basis)) return std::nullopt;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
    if (rs.positive_roots[k].coords == v.coords) return static_cast<int>(k);
  return std::nullopt;
}

}  // namespace diraceig
