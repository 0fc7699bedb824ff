#include <benchmark/benchmark.h>

#include "waring/decompose.hpp"

using namespace waring;

namespace {

const char* const kForms[] = {
    "x1*x2*x3",          "x1*x2^2",           "x1*x2^7",   "x1*x2*x3*x4^5",
    "x1*x2^2*x3^2*x4^3", "x1^2*x2^2*x3^2*x4^2", "x1*x2^4*x3^6",
};

void BM_DecomposeForm(benchmark::State& state) {
  const CoprimeForm form = parse_form(kForms[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_form(form));
  state.SetLabel(kForms[state.range(0)]);
}
BENCHMARK(BM_DecomposeForm)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_VerifyDecomposition(benchmark::State& state) {
  const CoprimeForm form = parse_form(kForms[state.range(0)]);
  const auto decomposition = decompose_form(form);
  for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(form, decomposition));
  state.SetLabel(kForms[state.range(0)]);
}
BENCHMARK(BM_VerifyDecomposition)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

}  // namespace
