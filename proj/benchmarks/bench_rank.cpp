#include <benchmark/benchmark.h>

#include <random>

#include "waring/apolarity.hpp"
#include "waring/rank.hpp"

using namespace waring;

namespace {

void BM_Survey(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(survey_max_monomial_rank(n, d));
  state.counters["vectors"] = static_cast<double>(count_partitions(d, n));
}
BENCHMARK(BM_Survey)->Args({3, 20})->Args({4, 30})->Args({6, 40})->Unit(benchmark::kMillisecond);

void BM_RatioReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(asymptotic_ratio_report(static_cast<unsigned>(state.range(0)), 200));
}
BENCHMARK(BM_RatioReport)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CatalecticantBound(benchmark::State& state) {
  const Polynomial f = parse_expression("x1^2*x2^3*x3^3").to_polynomial();
  for (auto _ : state) benchmark::DoNotOptimize(catalecticant_lower_bound(f));
}
BENCHMARK(BM_CatalecticantBound)->Unit(benchmark::kMillisecond);

void BM_ClaimIdentity(benchmark::State& state) {
  const std::vector<MonomialIdeal> ideals = {
      MonomialIdeal(5, {{5, 0, 0, 0, 0}, {0, 4, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}),
      MonomialIdeal(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 5, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}),
      MonomialIdeal(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 5, 0}, {0, 0, 0, 0, 5}}),
  };
  for (auto _ : state) benchmark::DoNotOptimize(verify_claim_identity(ideals));
}
BENCHMARK(BM_ClaimIdentity)->Unit(benchmark::kMillisecond);

}  // namespace
