// Command-line front end: exact first Dirac eigenvalues of the compact spin
// inner symmetric spaces, from root-system data.
//
// Exit codes: 0 success, 1 verification mismatch, 2 unknown space or bad
// parameters, 3 no spin structure (and --force not given), 4 an explicitly
// requested orbit oracle exceeded its cap.

#include <CLI11.hpp>
#include <json.hpp>

#include "diraceig/dirac.hpp"
#include "diraceig/json_io.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace diraceig;

struct Selection {
  SymmetricPair pair;
  std::optional<long> m;
};

struct ComputeOptions {
  std::optional<std::string> space;
  std::optional<std::string> family;
  std::optional<long> m;
  std::optional<int> node;
  std::string method = "closed";
  std::size_t cap = kDefaultOrbitCap;
  bool force = false;
  std::string format = "text";
  int digits = 12;
};

Selection resolve_selection(const ComputeOptions& opt) {
  if (opt.space && opt.family)
    throw UnknownSpace("give either --space or --family, not both");

  if (opt.space) {
    const CatalogEntry* entry = find_catalog_entry(*opt.space);
    if (!entry) throw UnknownSpace("unknown space \"" + *opt.space + "\"");
    if (opt.node) throw UnknownSpace("--node does not apply to catalog spaces");
    return {make_space(*entry, opt.m, opt.force), opt.m};
  }
  if (!opt.family) throw UnknownSpace("select a space with --space or --family");

  if (const CatalogEntry* entry = find_catalog_entry(*opt.family);
      entry && entry->parameterized)
    return {make_space(*entry, opt.m, opt.force), opt.m};

  const auto family = parse_family(*opt.family);
  if (!family) throw UnknownSpace("unknown family \"" + *opt.family + "\"");

  const bool exceptional = *family == Family::G2 || *family == Family::F4 ||
                           *family == Family::E6 || *family == Family::E7 ||
                           *family == Family::E8;
  if (exceptional) {
    const CatalogEntry* entry = find_catalog_entry(*opt.family);
    if (!opt.node || (entry && *opt.node == entry->node))
      return {make_space(*entry, std::nullopt, opt.force), std::nullopt};
    const RootSystem rs = killing_normalize(build_root_system(*family)).system;
    return {pair_from_marked_node(rs, *opt.node), std::nullopt};
  }

  // generic classical marked node: --m is the rank
  if (!opt.m) throw UnknownSpace("classical families need --m (the rank)");
  if (!opt.node) throw UnknownSpace("generic construction needs --node");
  const RootSystem rs =
      killing_normalize(build_root_system(*family, static_cast<int>(*opt.m))).system;
  return {pair_from_marked_node(rs, *opt.node), std::nullopt};
}

DiracResult dispatch_method(const SymmetricPair& pair, const std::string& method,
                            std::size_t cap, bool force) {
  if (!pair.spin && !force) throw NoSpinStructure(pair.name + " has no spin structure");
  if (method == "closed") return eigenvalue_closed(pair, force);
  if (method == "weyl") return eigenvalue_weyl_min(pair, cap);
  if (method == "restricted") return eigenvalue_restricted_w(pair, cap);
  return eigenvalue_spin_weights(pair, cap);
}

std::string csv_escape(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

constexpr const char* kCsvHeader = "space,m,n,lambda_sq,lambda_set_size,method";

std::string csv_row(const SymmetricPair& p, std::optional<long> m, const DiracResult& r) {
  std::ostringstream out;
  out << csv_escape(p.name) << "," << (m ? std::to_string(*m) : "") << "," << p.n << ","
      << r.lambda_sq << "," << r.lambda_set.size() << "," << method_name(r.method);
  return out.str();
}

void print_result_text(const SymmetricPair& p, const DiracResult& r, int digits,
                       bool formal) {
  std::cout << "space:           " << p.name << "\n"
            << "n:               " << p.n << "\n"
            << "lambda_sq:       " << r.lambda_sq << "\n"
            << "lambda:          " << sqrt_decimal(r.lambda_sq, digits)
            << " (approx, truncated)\n"
            << "terms:           distance " << r.term_distance << "  lambda_sum "
            << r.term_lambda << "  dim " << r.term_dim << "\n"
            << "lambda_set_size: " << r.lambda_set.size() << "\n"
            << "method:          " << method_name(r.method) << "\n";
  if (formal) std::cout << "formal:          yes (no spin structure; forced)\n";
}

int run_compute(const ComputeOptions& opt) {
  const Selection sel = resolve_selection(opt);
  const DiracResult r = dispatch_method(sel.pair, opt.method, opt.cap, opt.force);
  const bool formal = opt.force && !sel.pair.spin;
  if (opt.format == "json") {
    std::cout << result_to_json(sel.pair, r, opt.digits, formal) << "\n";
  } else if (opt.format == "csv") {
    std::cout << kCsvHeader << "\n" << csv_row(sel.pair, sel.m, r) << "\n";
  } else {
    print_result_text(sel.pair, r, opt.digits, formal);
  }
  return 0;
}

struct Table1Row {
  SymmetricPair pair;
  std::optional<long> m;
  DiracResult result;
  Rational ratio;  // lambda_sq / (Scal/4) = 8 lambda_sq / n
};

std::vector<Table1Row> table1_rows(const std::vector<long>& m_list) {
  std::vector<Table1Row> rows;
  for (const auto& entry : catalog()) {
    if (!entry.spin) continue;  // Table I has no F4 row
    std::vector<long> ms;
    if (entry.parameterized) {
      if (m_list.empty()) {
        ms = {entry.min_m, entry.min_m + 2};
      } else {
        for (long m : m_list)
          if (m >= entry.min_m && (!entry.spin_needs_even_m || m % 2 == 0))
            ms.push_back(m);
      }
    } else {
      ms = {0};
    }
    for (long m : ms) {
      const std::optional<long> marg =
          entry.parameterized ? std::optional<long>(m) : std::nullopt;
      SymmetricPair pair = make_space(entry, marg);
      DiracResult r = eigenvalue_closed(pair);
      Rational ratio = Rational(8) * r.lambda_sq / Rational(pair.n);
      rows.push_back({std::move(pair), marg, std::move(r), std::move(ratio)});
    }
  }
  return rows;
}

int run_table1(const std::vector<long>& m_list, const std::string& format, int digits) {
  const auto rows = table1_rows(m_list);
  if (format == "csv") {
    std::cout << kCsvHeader << "\n";
    for (const auto& row : rows) std::cout << csv_row(row.pair, row.m, row.result) << "\n";
    return 0;
  }
  if (format == "json") {
    std::cout << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::json j = nlohmann::json::parse(
          result_to_json(rows[i].pair, rows[i].result, digits, false));
      if (rows[i].m) j["m"] = *rows[i].m;
      j["ratio"] = rows[i].ratio.str();
      std::cout << j.dump(2) << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
    return 0;
  }
  std::size_t name_width = 5;
  for (const auto& row : rows) name_width = std::max(name_width, row.pair.name.size());
  std::cout << "space" << std::string(name_width - 5 + 2, ' ')
            << "m    n     lambda_sq  ratio     lambda\n";
  for (const auto& row : rows) {
    std::ostringstream line;
    line << row.pair.name << std::string(name_width - row.pair.name.size() + 2, ' ');
    const auto pad = [&line](const std::string& s, std::size_t w) {
      line << s << (s.size() < w ? std::string(w - s.size(), ' ') : " ");
    };
    pad(row.m ? std::to_string(*row.m) : "-", 5);
    pad(std::to_string(row.pair.n), 6);
    pad(row.result.lambda_sq.str(), 11);
    pad(row.ratio.str(), 10);
    line << sqrt_decimal(row.result.lambda_sq, digits);
    std::cout << line.str() << "\n";
  }
  return 0;
}

int run_list(const std::string& format) {
  if (format == "json") {
    std::cout << catalog_to_json() << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "key,name,dim,spin,spin_unique,expected_lambda_sq\n";
    for (const auto& e : catalog()) {
      const std::string dim = e.parameterized ? "4m" : std::to_string(e.fixed_dim);
      const std::string spin = e.spin_needs_even_m ? "iff m even" : (e.spin ? "yes" : "no");
      std::string expected;
      if (e.expected_lambda_sq && e.expected_lambda_sq->is_constant())
        expected = e.expected_lambda_sq->eval(0).str();
      std::cout << e.key << "," << csv_escape(e.name) << "," << dim << "," << spin << ","
                << (e.spin_unique ? "yes" : "no") << "," << expected << "\n";
    }
    return 0;
  }
  for (const auto& e : catalog()) {
    std::cout << e.key << "\t" << e.name << "\tdim "
              << (e.parameterized ? "4m" : std::to_string(e.fixed_dim)) << "\tspin "
              << (e.spin_needs_even_m ? "iff m even" : (e.spin ? "yes (unique)" : "no"));
    if (e.expected_lambda_sq && e.expected_lambda_sq->is_constant())
      std::cout << "\tlambda_sq " << e.expected_lambda_sq->eval(0);
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: cross-route and lemma suites, one printed line per check
// ---------------------------------------------------------------------------

class Reporter {
public:
  void check(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
    ++total_;
    if (!ok) ++failures_;
  }
  int failures() const { return failures_; }
  int total() const { return total_; }

private:
  int total_ = 0;
  int failures_ = 0;
};

std::vector<Rational> lambda_value_multiset(const SymmetricPair& p) {
  std::vector<Rational> values;
  for (const auto& e : lambda_set(p).elements) values.push_back(e.value);
  std::sort(values.begin(), values.end());
  return values;
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

void verify_strange_formula(Reporter& rep) {
  std::vector<std::pair<Family, int>> systems = {
      {Family::G2, 2}, {Family::F4, 4}, {Family::E6, 6}, {Family::E7, 7}, {Family::E8, 8}};
  for (int r = 1; r <= 5; ++r) systems.push_back({Family::A, r});
  for (int r = 2; r <= 5; ++r) systems.push_back({Family::B, r});
  for (int r = 2; r <= 5; ++r) systems.push_back({Family::C, r});
  for (int r = 3; r <= 6; ++r) systems.push_back({Family::D, r});
  for (auto [family, rank] : systems) {
    const auto ns = killing_normalize(build_root_system(family, rank));
    const Rational got = norm_sq(ns.system.form, ns.system.weyl_vector);
    const Rational want = Rational(ns.system.dim_g, 24);
    rep.check("strange formula " + ns.system.name(), got == want,
              "<delta,delta> = " + got.str() + ", dim/24 = " + want.str());
  }
  const std::vector<std::pair<std::string, Rational>> scales = {
      {"G2", Rational(1, 8)},
      {"E6", Rational(1, 24)},
      {"E7", Rational(1, 36)},
      {"E8", Rational(1, 60)}};
  for (const auto& [key, want] : scales) {
    const auto ns = killing_normalize(build_root_system(*parse_family(key)));
    rep.check("normalization scale " + key, ns.scale == want,
              ns.scale.str() + " vs " + want.str());
  }
  std::vector<SymmetricPair> charts;
  for (long m = 1; m <= 4; ++m) charts.push_back(quaternionic_projective(m));
  for (long m : {2L, 4L}) charts.push_back(complex_grassmannian2(m));
  for (long m : {4L, 6L}) charts.push_back(real_grassmannian4(m));
  for (const auto& p : charts) {
    const Rational got = norm_sq(p.g.form, p.g.weyl_vector);
    const Rational want = Rational(p.g.dim_g, 24);
    rep.check("strange formula (chart) " + p.name, got == want,
              got.str() + " = " + want.str() + " with no rescaling");
  }
}

void verify_table1(Reporter& rep) {
  for (const auto& entry : catalog()) {
    if (!entry.expected_lambda_sq) continue;
    std::vector<long> ms;
    if (entry.parameterized)
      for (long m = entry.min_m; m <= 12; m += entry.m_step) ms.push_back(m);
    else
      ms.push_back(0);
    for (long m : ms) {
      const std::optional<long> marg =
          entry.parameterized ? std::optional<long>(m) : std::nullopt;
      const auto pair = make_space(entry, marg);
      const auto r = eigenvalue_closed(pair);
      const Rational want = entry.expected_lambda_sq->eval(m);
      rep.check("table1 " + pair.name, r.lambda_sq == want,
                "lambda_sq = " + r.lambda_sq.str() + ", table " + want.str());
    }
  }
}

void verify_fixtures(Reporter& rep) {
  struct Fixture {
    SymmetricPair pair;
    Rational dist_sq;
    long count;
    Rational sum;
  };
  std::vector<Fixture> fixtures;
  for (long m : {1L, 2L, 3L})
    fixtures.push_back({quaternionic_projective(m), Rational(m, 4 * (m + 2)), 0, 0});
  for (long m : {2L, 4L})
    fixtures.push_back(
        {complex_grassmannian2(m), Rational(m, 4), m - 1, Rational(-m * m, 8 * (m + 2))});
  for (long m : {4L, 6L})
    fixtures.push_back(
        {real_grassmannian4(m), Rational(m, m + 2), 1, Rational(-1, 2 * (m + 2))});
  const auto marked = [](const char* key, long p, long q, long count, long sp, long sq) {
    return Fixture{make_space(*find_catalog_entry(key), std::nullopt), Rational(p, q),
                   count, Rational(sp, sq)};
  };
  fixtures.push_back(marked("G2", 1, 4, 0, 0, 1));
  fixtures.push_back(marked("E6", 25, 12, 7, -7, 12));
  fixtures.push_back(marked("E7", 32, 9, 13, -41, 36));
  fixtures.push_back(marked("E8", 98, 15, 25, -137, 60));

  for (const auto& f : fixtures) {
    const Rational dist = norm_sq(f.pair.g.form, f.pair.delta_n());
    const auto lam = lambda_set(f.pair);
    rep.check("fixture dist " + f.pair.name, dist == f.dist_sq,
              "||delta_G - delta_K||^2 = " + dist.str() + ", expected " + f.dist_sq.str());
    rep.check("fixture |Lambda| " + f.pair.name,
              lam.size() == static_cast<std::size_t>(f.count),
              std::to_string(lam.size()) + " elements, expected " + std::to_string(f.count));
    rep.check("fixture Lambda sum " + f.pair.name, lam.sum() == f.sum,
              lam.sum().str() + ", expected " + f.sum.str());
  }
}

std::vector<SymmetricPair> route_pairs(bool include_e7, bool include_e8) {
  std::vector<SymmetricPair> pairs;
  for (long m : {1L, 2L, 3L}) pairs.push_back(quaternionic_projective(m));
  for (long m : {2L, 4L}) pairs.push_back(complex_grassmannian2(m));
  for (long m : {4L, 6L}) pairs.push_back(real_grassmannian4(m));
  pairs.push_back(make_space(*find_catalog_entry("G2"), std::nullopt));
  pairs.push_back(make_space(*find_catalog_entry("E6"), std::nullopt));
  if (include_e7) pairs.push_back(make_space(*find_catalog_entry("E7"), std::nullopt));
  if (include_e8) pairs.push_back(make_space(*find_catalog_entry("E8"), std::nullopt));
  return pairs;
}

void verify_routes(Reporter& rep, const std::vector<SymmetricPair>& pairs,
                   std::size_t cap) {
  for (const auto& p : pairs) {
    const auto closed = eigenvalue_closed(p);
    const auto weyl = eigenvalue_weyl_min(p, cap);
    const auto restricted = eigenvalue_restricted_w(p, cap);
    const auto spin = eigenvalue_spin_weights(p, cap);
    const bool ok = closed.lambda_sq == weyl.lambda_sq &&
                    closed.lambda_sq == restricted.lambda_sq &&
                    closed.lambda_sq == spin.lambda_sq;
    rep.check("route agreement " + p.name, ok,
              "closed " + closed.lambda_sq.str() + ", weyl " + weyl.lambda_sq.str() +
                  ", restricted " + restricted.lambda_sq.str() + ", spin-weights " +
                  spin.lambda_sq.str());
  }
}

void verify_lemma(Reporter& rep, const std::vector<SymmetricPair>& pairs,
                  std::size_t cap) {
  for (const auto& p : pairs) {
    const auto report = verify_lambda_lemma(p, cap);
    rep.check("lambda lemma " + p.name, report.holds,
              "orbit max " + report.orbit_max.str() + ", <delta_G,delta_K> - sum = " +
                  report.lambda_rhs.str());
  }
}

void verify_inversion_sets(Reporter& rep) {
  const std::vector<std::pair<Family, int>> systems = {
      {Family::G2, 2}, {Family::C, 2}, {Family::C, 3}, {Family::A, 3}};
  for (auto [family, rank] : systems) {
    const auto rs = build_root_system(family, rank);
    const auto elements = orbit(rs, rs.weyl_vector, kDefaultOrbitCap);
    bool ok = true;
    std::string detail;
    for (const auto& el : elements) {
      const auto inv = inversion_set(rs, el.word);  // throws if negative or repeated
      WeightVec total = WeightVec::zero(rs.basis);
      for (const auto& root : inv) total = total + root;
      if (!(total == rs.weyl_vector - el.point)) {
        ok = false;
        detail = "inversion sum mismatch at an orbit element";
        break;
      }
    }
    if (ok)
      detail = std::to_string(elements.size()) +
               " elements; every witness word has distinct positive inversion roots"
               " summing to delta - w delta";
    rep.check("inversion sets " + rs.name(), ok, detail);
  }
}

void verify_cross_construction(Reporter& rep) {
  struct Target {
    const char* key;
    long m;
    Family family;
    int rank;
  };
  std::vector<Target> targets;
  for (long m : {1L, 2L, 3L})
    targets.push_back({"HP", m, Family::C, static_cast<int>(m) + 1});
  for (long m : {2L, 4L})
    targets.push_back({"Gr2", m, Family::A, static_cast<int>(m) + 1});
  targets.push_back({"Gr4", 4, Family::D, 4});

  for (const auto& t : targets) {
    const auto coord = make_space(*find_catalog_entry(t.key), t.m);
    const auto coord_lambda = eigenvalue_closed(coord).lambda_sq;
    const auto coord_values = lambda_value_multiset(coord);

    const RootSystem rs = killing_normalize(build_root_system(t.family, t.rank)).system;
    // match by (n, lambda_sq); the suitable node must also reproduce the
    // Lambda-value multiset. Other matching nodes are conjugate slicings of
    // the same space whose Lambda sits differently against the fixed positive
    // system; they are reported, not failures.
    std::vector<int> full, partial;
    for (int node : candidate_nodes(rs)) {
      const auto pair = pair_from_marked_node(rs, node, NodeMark::allow_one_or_two);
      if (pair.n != coord.n) continue;
      const auto r = eigenvalue_closed(pair, /*force=*/true);
      if (r.lambda_sq != coord_lambda) continue;
      (lambda_value_multiset(pair) == coord_values ? full : partial).push_back(node);
    }
    std::string detail = "lambda_sq " + coord_lambda.str() + ", n " +
                         std::to_string(coord.n) + ", Lambda values " +
                         join_rationals(coord_values) + "; " + rs.name() + " node(s)";
    for (int node : full) detail += " " + std::to_string(node);
    detail += " agree";
    if (!partial.empty()) {
      detail += "; node(s)";
      for (int node : partial) detail += " " + std::to_string(node);
      detail += " match (n, lambda_sq) only";
    }
    if (full.size() + partial.size() > 1) detail += " (ambiguous match reported)";
    rep.check("cross-construction " + coord.name, !full.empty(), detail);
  }
}

int run_verify(const std::vector<std::string>& include, std::size_t cap) {
  for (const auto& inc : include)
    if (inc != "E7" && inc != "E8") throw UnknownSpace("--include accepts E7 or E8");
  const bool include_e7 = std::count(include.begin(), include.end(), "E7") > 0;
  const bool include_e8 = std::count(include.begin(), include.end(), "E8") > 0;

  Reporter rep;
  verify_strange_formula(rep);
  verify_table1(rep);
  verify_fixtures(rep);
  const auto pairs = route_pairs(include_e7, include_e8);
  verify_routes(rep, pairs, cap);
  verify_lemma(rep, pairs, cap);
  verify_inversion_sets(rep);
  verify_cross_construction(rep);
  std::cout << rep.total() << " checks, " << (rep.total() - rep.failures()) << " ok, "
            << rep.failures() << " failed\n";
  return rep.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact first Dirac eigenvalues on compact spin inner symmetric spaces"};
  app.require_subcommand(1);

  ComputeOptions opt;
  std::vector<long> table_m;
  std::vector<std::string> include;
  std::string table_format = "text";
  std::string list_format = "text";
  int table_digits = 12;
  std::size_t verify_cap = kDefaultOrbitCap;

  auto* compute = app.add_subcommand("compute", "compute lambda^2 for one space");
  compute->add_option("--space", opt.space,
                      "catalog key or name (HP, Gr2, Gr4, G2, F4, E6, E7, E8)");
  compute->add_option("--family", opt.family,
                      "HP/Gr2/Gr4 (with --m) or a Lie family A,B,C,D,G2,F4,E6,E7,E8");
  compute->add_option("--m", opt.m, "parameter m (for A-D families: the rank)");
  compute->add_option("--node", opt.node, "marked simple-root index, 1-based");
  compute->add_option("--method", opt.method, "closed|weyl|restricted|spin-weights")
      ->check(CLI::IsMember({"closed", "weyl", "restricted", "spin-weights"}));
  compute->add_option("--cap", opt.cap, "orbit cap for oracle methods")
      ->check(CLI::Range(std::size_t(1), std::size_t(1) << 62));
  compute->add_flag("--force", opt.force,
                    "compute a formal value without a spin structure");
  compute->add_option("--format", opt.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  compute->add_option("--digits", opt.digits, "decimal digits of the lambda approximation")
      ->check(CLI::Range(1, 64));

  auto* table1 = app.add_subcommand("table1", "lambda^2 for the whole catalog");
  table1->add_option("--m", table_m, "m values for the parameterized rows");
  table1->add_option("--format", table_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  table1->add_option("--digits", table_digits,
                     "decimal digits of the lambda approximation")
      ->check(CLI::Range(1, 64));

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--include", include, "extend the orbit suites (E7, E8)");
  verify->add_option("--cap", verify_cap, "orbit cap for the oracle suites")
      ->check(CLI::Range(std::size_t(1), std::size_t(1) << 62));

  auto* list = app.add_subcommand("list", "dump the catalog");
  list->add_option("--format", list_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(opt);
    if (table1->parsed()) return run_table1(table_m, table_format, table_digits);
    if (verify->parsed()) return run_verify(include, verify_cap);
    return run_list(list_format);
  } catch (const NoSpinStructure& e) {
    std::cerr << "error: " << e.what() << "; rerun with --force for the formal value\n";
    return 3;
  } catch (const OrbitCapExceeded& e) {
    std::cerr << "error: " << e.what()
              << "; raise --cap (E7 needs >= 2903040; E8 is infeasible at desk scale)\n";
    return 4;
  } catch (const UnknownSpace& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NodeNotOrderTwo& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
