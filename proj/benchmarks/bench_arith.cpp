#include <benchmark/benchmark.h>

#include "waring/cyclotomic.hpp"
#include "waring/polynomial.hpp"

using namespace waring;

namespace {

CyclotomicNumber dense_element(int order, int seed) {
  std::vector<Rational> c(euler_phi(order));
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = Rational(static_cast<long>((seed + 3 * k) % 11) - 5, static_cast<unsigned long>(k % 4 + 1));
    c[k].canonicalize();
  }
  return CyclotomicNumber(order, c);
}

void BM_CyclotomicMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto a = dense_element(order, 1);
  const auto b = dense_element(order, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetLabel("phi=" + std::to_string(euler_phi(order)));
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(3)->Arg(12)->Arg(35)->Arg(60)->Arg(105);

void BM_CyclotomicInverse(benchmark::State& state) {
  const auto a = dense_element(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(12)->Arg(35)->Arg(60);

void BM_PolyPowLinear(benchmark::State& state) {
  const auto z = CyclotomicNumber::zeta(12);
  const std::vector<CyclotomicNumber> l = {1, z, z.pow(5), z.pow(7)};
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poly_pow_linear(l, d));
}
BENCHMARK(BM_PolyPowLinear)->DenseRange(4, 10, 2);

}  // namespace
