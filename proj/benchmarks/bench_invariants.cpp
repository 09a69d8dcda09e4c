#include <benchmark/benchmark.h>

#include <vector>

#include "toricmld/fibration.hpp"
#include "toricmld/oracle.hpp"
#include "toricmld/scan.hpp"
#include "toricmld/weighted_blowup.hpp"

namespace {

using namespace toricmld;

WeightVector blowup(std::vector<Int> w) {
  return WeightVector(LatticeVector(std::move(w)), WeightMode::blowup);
}

void BM_decompose_d4(benchmark::State& state) {
  const WeightVector n = blowup({20, 57, 133, 210});
  const LatticeVector m({3, 11, 40, 100});
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(m, n));
  }
}
BENCHMARK(BM_decompose_d4);

void BM_mld_pair(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const WeightVector n = blowup({k, k + 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(mld(n).value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mld_pair)->Range(8, 4096)->Complexity(benchmark::oN);

void BM_mld_d4(benchmark::State& state) {
  const WeightVector n = blowup({20, 57, 133, 210});
  for (auto _ : state) {
    benchmark::DoNotOptimize(mld(n).value);
  }
}
BENCHMARK(BM_mld_d4);

void BM_mld_prime_d3(benchmark::State& state) {
  const WeightVector n(LatticeVector({97, -41, 23}), WeightMode::fibration);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mld_prime(n).value);
  }
}
BENCHMARK(BM_mld_prime_d3);

void BM_oracle_mld_d2(benchmark::State& state) {
  const WeightVector n = blowup({11, 13});
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::mld_bruteforce(n, 13).value);
  }
}
BENCHMARK(BM_oracle_mld_d2);

void BM_scan_blowup_d2(benchmark::State& state) {
  ScanParams params;
  params.mode = ScanMode::blowup;
  params.dim = 2;
  params.eps = make_rational(1, 2);
  params.weight_bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_blowup(params).records_total);
  }
}
BENCHMARK(BM_scan_blowup_d2)->Arg(20)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
