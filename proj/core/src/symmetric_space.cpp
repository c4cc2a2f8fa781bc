#include "diraceig/symmetric_space.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace diraceig {

namespace {

InnerForm diagonal_form(BasisTag tag, const Rational& c) {
  const std::size_t d = static_cast<std::size_t>(tag.ambient_dim);
  InnerForm form;
  form.basis = tag;
  form.gram.assign(d, std::vector<Rational>(d));
  for (std::size_t k = 0; k < d; ++k) form.gram[k][k] = c;
  return form;
}

WeightVec basis_diff(BasisTag tag, int i, int j) {  // e_i - e_j, 0-based
  WeightVec v = WeightVec::zero(tag);
  v.coords[static_cast<std::size_t>(i)] = 1;
  v.coords[static_cast<std::size_t>(j)] = -1;
  return v;
}

// positions of the nonzero coordinates, or nullopt if more than two
std::optional<std::pair<int, int>> two_support(const WeightVec& v) {
  int a = -1, b = -1;
  for (std::size_t k = 0; k < v.coords.size(); ++k) {
    if (v.coords[k].is_zero()) continue;
    if (a < 0)
      a = static_cast<int>(k);
    else if (b < 0)
      b = static_cast<int>(k);
    else
      return std::nullopt;
  }
  if (a < 0 || b < 0) return std::nullopt;
  return std::make_pair(a, b);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

SymmetricPair make_symmetric_pair(RootSystem g, std::vector<int> k_positive,
                                  std::string name, bool spin, bool spin_unique) {
  std::sort(k_positive.begin(), k_positive.end());
  k_positive.erase(std::unique(k_positive.begin(), k_positive.end()), k_positive.end());
  const int total = static_cast<int>(g.positive_roots.size());
  for (int idx : k_positive)
    if (idx < 0 || idx >= total)
      throw std::out_of_range("make_symmetric_pair: root index out of range");

  SymmetricPair p;
  p.delta_k = WeightVec::zero(g.basis);
  std::vector<char> in_k(static_cast<std::size_t>(total), 0);
  for (int idx : k_positive) {
    in_k[static_cast<std::size_t>(idx)] = 1;
    p.delta_k = p.delta_k + g.positive_roots[static_cast<std::size_t>(idx)];
  }
  p.delta_k = Rational(1, 2) * p.delta_k;
  for (int idx = 0; idx < total; ++idx)
    if (!in_k[static_cast<std::size_t>(idx)]) p.noncompact_positive.push_back(idx);
  if (p.noncompact_positive.empty())
    throw InvalidPair("pair has no noncompact roots (K = G)");

  p.g = std::move(g);
  p.k_positive = std::move(k_positive);
  p.n = 2 * static_cast<long>(p.noncompact_positive.size());
  p.name = std::move(name);
  p.spin = spin;
  p.spin_unique = spin_unique;
  return p;
}

SymmetricPair pair_from_marked_node(const RootSystem& rs, int node, NodeMark mark) {
  if (node < 1 || node > rs.rank)
    throw std::out_of_range("pair_from_marked_node: node index out of range");
  const std::size_t j = static_cast<std::size_t>(node - 1);
  const long m_j = rs.positive_coeffs.back()[j];  // highest root sorts last
  const bool admissible = (m_j == 2) || (mark == NodeMark::allow_one_or_two && m_j == 1);
  if (!admissible)
    throw NodeNotOrderTwo("highest-root coefficient at node " + std::to_string(node) +
                          " of " + rs.name() + " is " + std::to_string(m_j));
  std::vector<int> k;
  for (std::size_t idx = 0; idx < rs.positive_coeffs.size(); ++idx)
    if (rs.positive_coeffs[idx][j] != 1) k.push_back(static_cast<int>(idx));
  return make_symmetric_pair(rs, std::move(k),
                             rs.name() + " node " + std::to_string(node),
                             /*spin=*/false, /*spin_unique=*/false);
}

SymmetricPair quaternionic_projective(long m) {
  if (m < 1) throw std::invalid_argument("quaternionic_projective: m >= 1 required");
  const int d = static_cast<int>(m) + 1;
  const BasisTag tag{BasisKind::orthogonal, d};

  std::vector<WeightVec> simples;
  for (int i = 0; i + 1 < d; ++i) simples.push_back(basis_diff(tag, i, i + 1));
  WeightVec last = WeightVec::zero(tag);
  last.coords[static_cast<std::size_t>(d - 1)] = 2;
  simples.push_back(std::move(last));

  RootSystem rs = assemble_root_system(Family::C, tag, std::move(simples),
                                       diagonal_form(tag, Rational(1, 4 * (m + 2))));

  // noncompact roots are x_i +- x_{m+1}; everything else (including all 2 x_i)
  // stays in Sp_m x Sp_1
  std::vector<int> k;
  for (std::size_t idx = 0; idx < rs.positive_roots.size(); ++idx) {
    const auto sup = two_support(rs.positive_roots[idx]);
    const bool noncompact =
        sup && sup->second == d - 1 &&
        abs(rs.positive_roots[idx].coords[static_cast<std::size_t>(d - 1)]) == Rational(1);
    if (!noncompact) k.push_back(static_cast<int>(idx));
  }
  return make_symmetric_pair(std::move(rs), std::move(k), "HP^" + std::to_string(m),
                             /*spin=*/true, /*spin_unique=*/true);
}

SymmetricPair complex_grassmannian2(long m, bool force) {
  if (m < 2) throw std::invalid_argument("complex_grassmannian2: m >= 2 required");
  const bool spin = (m % 2 == 0);
  const std::string name = "Gr2(C^" + std::to_string(m + 2) + ")";
  if (!spin && !force)
    throw NoSpinStructure(name + " has a spin structure only for even m");

  const int d = static_cast<int>(m) + 1;
  const BasisTag tag{BasisKind::orthogonal, d};

  // trace-corrected form of the su chart: <e_k, e_l> = d_{kl}/(2(m+2)) - 1/(2(m+2)^2)
  InnerForm form = diagonal_form(tag, Rational(1, 2 * (m + 2)));
  const Rational corr = Rational(-1, 2 * (m + 2) * (m + 2));
  for (auto& row : form.gram)
    for (auto& g : row) g += corr;

  std::vector<WeightVec> simples;
  for (int i = 0; i + 1 < d; ++i) simples.push_back(basis_diff(tag, i, i + 1));
  WeightVec last{std::vector<Rational>(static_cast<std::size_t>(d), Rational(1)), tag};
  last.coords[static_cast<std::size_t>(d - 1)] = 2;  // x_{m+1} + sum_k x_k
  simples.push_back(std::move(last));

  RootSystem rs = assemble_root_system(Family::A, tag, std::move(simples), std::move(form));

  // difference roots x_i - x_j stay in K iff j <= m; of the sum family only
  // x_{m+1} + sum_k x_k does
  std::vector<int> k;
  for (std::size_t idx = 0; idx < rs.positive_roots.size(); ++idx) {
    const auto& coords = rs.positive_roots[idx].coords;
    const bool difference =
        std::any_of(coords.begin(), coords.end(), [](const Rational& c) { return c.sign() < 0; });
    const Rational& tail = coords[static_cast<std::size_t>(d - 1)];
    const bool in_k = difference ? tail.is_zero() : tail == Rational(2);
    if (in_k) k.push_back(static_cast<int>(idx));
  }
  return make_symmetric_pair(std::move(rs), std::move(k), name, spin, spin);
}

SymmetricPair real_grassmannian4(long m) {
  if (m < 4) throw std::invalid_argument("real_grassmannian4: m >= 4 required");
  const std::string name = "Gr~4(R^" + std::to_string(m + 4) + ")";
  if (m % 2 != 0)
    throw NoSpinStructure(name + " has a spin structure only for even m (and odd m has no"
                          " even-dimensional chart; use a B-family marked node instead)");

  const int d = static_cast<int>(m) / 2 + 2;
  const BasisTag tag{BasisKind::orthogonal, d};

  std::vector<WeightVec> simples;
  for (int i = 0; i + 1 < d; ++i) simples.push_back(basis_diff(tag, i, i + 1));
  WeightVec last = WeightVec::zero(tag);
  last.coords[static_cast<std::size_t>(d - 2)] = 1;
  last.coords[static_cast<std::size_t>(d - 1)] = 1;
  simples.push_back(std::move(last));

  RootSystem rs = assemble_root_system(Family::D, tag, std::move(simples),
                                       diagonal_form(tag, Rational(1, 2 * (m + 2))));

  // K keeps x_i +- x_j with j <= m/2 plus the D2 block on the last two slots
  const int half = static_cast<int>(m) / 2;
  std::vector<int> k;
  for (std::size_t idx = 0; idx < rs.positive_roots.size(); ++idx) {
    const auto sup = two_support(rs.positive_roots[idx]);
    const bool in_k =
        sup && (sup->second < half || (sup->first == half && sup->second == half + 1));
    if (in_k) k.push_back(static_cast<int>(idx));
  }
  return make_symmetric_pair(std::move(rs), std::move(k), name, /*spin=*/true,
                             /*spin_unique=*/true);
}

Rational scalar_curvature(const SymmetricPair& p) { return Rational(p.n, 2); }

std::vector<WeightVec> k_simple_roots(const SymmetricPair& p) {
  std::vector<const WeightVec*> k_roots;
  for (int idx : p.k_positive)
    k_roots.push_back(&p.g.positive_roots[static_cast<std::size_t>(idx)]);
  const auto is_k_root = [&](const WeightVec& v) {
    return std::any_of(k_roots.begin(), k_roots.end(),
                       [&](const WeightVec* r) { return r->coords == v.coords; });
  };
  std::vector<WeightVec> simple;
  for (const WeightVec* candidate : k_roots) {
    bool decomposable = false;
    for (const WeightVec* a : k_roots) {
      const WeightVec rest = *candidate - *a;
      if (a != candidate && is_k_root(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(*candidate);
  }
  return simple;
}

std::vector<int> candidate_nodes(const RootSystem& rs) {
  const auto& top = rs.positive_coeffs.back();
  std::vector<int> nodes;
  for (int j = 0; j < rs.rank; ++j)
    if (top[static_cast<std::size_t>(j)] == 2) nodes.push_back(j + 1);
  if (!nodes.empty()) return nodes;
  for (int j = 0; j < rs.rank; ++j)
    if (top[static_cast<std::size_t>(j)] == 1) nodes.push_back(j + 1);
  return nodes;
}

Rational RationalFormula::eval(long m) const {
  const auto poly = [m](const std::vector<Rational>& c) {
    Rational acc, power = 1;
    for (const auto& coeff : c) {
      acc += coeff * power;
      power *= Rational(m);
    }
    return acc;
  };
  const Rational d = poly(den);
  if (d.is_zero()) throw std::domain_error("formula denominator vanishes");
  return poly(num) / d;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    using Recipe = CatalogEntry::Recipe;
    const auto constant = [](long p, long q) {
      return RationalFormula{{Rational(p, q)}, {Rational(1)}};
    };
    std::vector<CatalogEntry> v;

    CatalogEntry hp;
    hp.key = "HP";
    hp.name = "HP^m = Sp_{m+1}/(Sp_m Sp_1)";
    hp.parameterized = true;
    hp.min_m = 1;
    hp.m_step = 1;
    hp.recipe = Recipe::coordinate_hp;
    hp.family = Family::C;
    hp.spin = true;
    hp.spin_unique = true;
    hp.expected_lambda_sq = RationalFormula{{0, 3, 1}, {4, 2}};  // m(m+3) / (2(m+2))
    hp.expected_lambda_count = constant(0, 1);
    v.push_back(std::move(hp));

    CatalogEntry gr2;
    gr2.key = "Gr2";
    gr2.name = "Gr2(C^{m+2}) = SU_{m+2}/S(U_m U_2)";
    gr2.parameterized = true;
    gr2.min_m = 2;
    gr2.m_step = 2;
    gr2.recipe = Recipe::coordinate_gr2;
    gr2.family = Family::A;
    gr2.spin_needs_even_m = true;
    gr2.spin = true;
    gr2.spin_unique = true;
    gr2.expected_lambda_sq = RationalFormula{{0, 4, 1}, {4, 2}};  // m(m+4) / (2(m+2))
    gr2.expected_lambda_count = RationalFormula{{-1, 1}, {1}};    // m - 1
    v.push_back(std::move(gr2));

    CatalogEntry gr4;
    gr4.key = "Gr4";
    gr4.name = "Gr~4(R^{m+4}) = Spin_{m+4}/(Spin_m Spin_4)";
    gr4.parameterized = true;
    gr4.min_m = 4;
    gr4.m_step = 2;
    gr4.recipe = Recipe::coordinate_gr4;
    gr4.family = Family::D;
    gr4.spin_needs_even_m = true;
    gr4.spin = true;
    gr4.spin_unique = true;
    gr4.expected_lambda_sq = RationalFormula{{-4, 6, 1}, {4, 2}};  // (m^2+6m-4)/(2(m+2))
    gr4.expected_lambda_count = constant(1, 1);
    v.push_back(std::move(gr4));

    const auto exceptional = [&](std::string key, std::string name, Family family,
                                 int node, long dim, bool spin,
                                 std::optional<RationalFormula> lambda_sq,
                                 std::optional<RationalFormula> count) {
      CatalogEntry e;
      e.key = std::move(key);
      e.name = std::move(name);
      e.recipe = Recipe::marked_node;
      e.family = family;
      e.node = node;
      e.fixed_dim = dim;
      e.spin = spin;
      e.spin_unique = spin;
      e.expected_lambda_sq = std::move(lambda_sq);
      e.expected_lambda_count = std::move(count);
      v.push_back(std::move(e));
    };

    exceptional("G2", "G2/SO4", Family::G2, 1, 8, true, constant(3, 2), constant(0, 1));
    exceptional("F4", "F4/(Sp3 SU2)", Family::F4, 1, 28, false, std::nullopt, std::nullopt);
    exceptional("E6", "E6/(SU6 SU2)", Family::E6, 6, 40, true, constant(41, 6),
                constant(7, 1));
    exceptional("E7", "E7/(Spin12 SU2)", Family::E7, 1, 64, true, constant(95, 9),
                constant(13, 1));
    exceptional("E8", "E8/(E7 SU2)", Family::E8, 1, 112, true, constant(269, 15),
                constant(25, 1));
    return v;
  }();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view selector) {
  const std::string needle = lower(selector);
  for (const auto& e : catalog())
    if (lower(e.key) == needle || e.name == selector) return &e;
  return nullptr;
}

SymmetricPair make_space(const CatalogEntry& entry, std::optional<long> m, bool force) {
  using Recipe = CatalogEntry::Recipe;
  if (entry.parameterized) {
    if (!m) throw UnknownSpace(entry.key + " is parameterized; a value of m is required");
    if (*m < entry.min_m)
      throw std::invalid_argument(entry.key + " requires m >= " +
                                  std::to_string(entry.min_m));
    switch (entry.recipe) {
      case Recipe::coordinate_hp: return quaternionic_projective(*m);
      case Recipe::coordinate_gr2: return complex_grassmannian2(*m, force);
      case Recipe::coordinate_gr4: return real_grassmannian4(*m);
      default: break;
    }
    throw UnknownSpace("unhandled parameterized recipe");
  }
  if (m) throw std::invalid_argument(entry.key + " takes no m parameter");
  const RootSystem rs = killing_normalize(build_root_system(entry.family)).system;
  SymmetricPair p = pair_from_marked_node(rs, entry.node);
  p.name = entry.name;
  p.spin = entry.spin;
  p.spin_unique = entry.spin_unique;
  return p;
}

}  // namespace diraceig
