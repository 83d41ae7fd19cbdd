#include <benchmark/benchmark.h>

#include "weilcensus/census.hpp"
#include "weilcensus/galoiscert.hpp"
#include "weilcensus/hassewitt.hpp"
#include "weilcensus/modpoly.hpp"
#include "weilcensus/weilpoly.hpp"

using namespace weilcensus;

static void BM_DegreePattern(benchmark::State& state) {
  const auto prime = static_cast<std::uint64_t>(state.range(0));
  const ModPolynomial f(prime, {3, 1, 4, 1, 5, 9, 2, 6, 1});
  for (auto _ : state) benchmark::DoNotOptimize(degree_pattern(f));
}
BENCHMARK(BM_DegreePattern)->Arg(101)->Arg(499)->Arg(65537);

static void BM_WeilStatus(benchmark::State& state) {
  const WeilBox box(static_cast<unsigned>(state.range(0)), 3, 2);
  std::vector<WeilCoefficients> points;
  box.for_each([&](const WeilCoefficients& w) {
    if (points.size() < 512) points.push_back(w);
  });
  for (auto _ : state) {
    for (const auto& w : points) benchmark::DoNotOptimize(weil_status(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_WeilStatus)->Arg(2)->Arg(3);

static void BM_CertifyW4(benchmark::State& state) {
  const FrobeniusPolynomial f = expand_frobenius(WeilCoefficients(5, 1, {1, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(certify_w2g(f, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_CertifyW4)->Arg(50)->Arg(200);

static void BM_HasseWitt(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const HyperellipticCurve c(p, IntPolynomial{1, 1, 0, 0, 0, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hasse_witt(c));
}
BENCHMARK(BM_HasseWitt)->Arg(101)->Arg(1009);

static void BM_Census(benchmark::State& state) {
  CensusOptions o;
  o.sieve_y = 200;
  for (auto _ : state) benchmark::DoNotOptimize(run_census(2, 3, static_cast<unsigned>(state.range(0)), o));
}
BENCHMARK(BM_Census)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
