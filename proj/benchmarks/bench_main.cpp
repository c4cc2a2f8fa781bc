#include <benchmark/benchmark.h>

#include "diraceig/dirac.hpp"

namespace {

using namespace diraceig;

void BM_BuildE8(benchmark::State& state) {
  for (auto _ : state) {
    auto rs = build_root_system(Family::E8);
    benchmark::DoNotOptimize(rs.positive_roots.size());
  }
}
BENCHMARK(BM_BuildE8);

void BM_ClosedFormE8(benchmark::State& state) {
  const auto pair = make_space(*find_catalog_entry("E8"), std::nullopt);
  for (auto _ : state) {
    auto r = eigenvalue_closed(pair);
    benchmark::DoNotOptimize(r.lambda_sq);
  }
}
BENCHMARK(BM_ClosedFormE8);

void BM_OrbitEnumeration(benchmark::State& state) {
  // D-series orbits: |W(D_n)| = 2^(n-1) n!
  const auto rs = build_root_system(Family::D, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto oi = OrbitIndex::build(rs, rs.weyl_vector, kDefaultOrbitCap);
    benchmark::DoNotOptimize(oi.size());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(
                              OrbitIndex::build(rs, rs.weyl_vector, kDefaultOrbitCap)
                                  .size()));
}
BENCHMARK(BM_OrbitEnumeration)->Arg(4)->Arg(5)->Arg(6);

void BM_WeylMinOracleE6(benchmark::State& state) {
  const auto pair = make_space(*find_catalog_entry("E6"), std::nullopt);
  for (auto _ : state) {
    auto r = eigenvalue_weyl_min(pair);
    benchmark::DoNotOptimize(r.lambda_sq);
  }
}
BENCHMARK(BM_WeylMinOracleE6);

void BM_Table1(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& e : catalog()) {
      if (!e.spin) continue;
      const std::optional<long> m =
          e.parameterized ? std::optional<long>(e.min_m) : std::nullopt;
      auto r = eigenvalue_closed(make_space(e, m));
      benchmark::DoNotOptimize(r.lambda_sq);
    }
  }
}
BENCHMARK(BM_Table1);

}  // namespace

BENCHMARK_MAIN();
