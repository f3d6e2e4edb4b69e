#include <benchmark/benchmark.h>

#include "wfid/elliptic.hpp"
#include "wfid/polyweights.hpp"
#include "wfid/pseries.hpp"
#include "wfid/residues.hpp"

using namespace wfid;

namespace {

std::vector<Scalar> points(int count, long offset) {
  std::vector<Scalar> t;
  for (int k = 0; k < count; ++k) t.push_back(Scalar::ratio(2 * k + offset, 3 + k));
  return t;
}

PolyParams poly(int n) {
  PolyParams p;
  p.eta = Scalar::ratio(5, 3);
  p.xs = points(n, 7);
  p.ys = points(n, 13);
  return p;
}

EllParams ell(int n, int order) {
  EllParams p;
  p.eta = Scalar::ratio(5, 3);
  p.alpha = Scalar::ratio(-4, 7);
  p.xs = points(n, 7);
  p.ys = points(n, 13);
  p.order = order;
  return p;
}

void BM_JingSum(benchmark::State& state) {
  const auto t = points(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(jing_sum(t, Scalar::ratio(5, 3)));
}
BENCHMARK(BM_JingSum)->DenseRange(1, 5);

void BM_GramPP(benchmark::State& state) {
  const PolyParams p = poly(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_pp(static_cast<int>(state.range(0)), p));
}
BENCHMARK(BM_GramPP)->Args({1, 2})->Args({2, 2})->Args({2, 3})->Args({3, 2});

void BM_Theta(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta(Scalar::ratio(7, 5), order));
}
BENCHMARK(BM_Theta)->RangeMultiplier(2)->Range(4, 32);

void BM_XiWeight(benchmark::State& state) {
  const int ell_ = static_cast<int>(state.range(0));
  const EllParams p = ell(2, static_cast<int>(state.range(1)));
  const Partition lambda = enumerate(ell_, 2).back();
  const auto t = points(ell_, 19);
  for (auto _ : state) benchmark::DoNotOptimize(xi_weight(lambda, t, p, Variant::Plain));
}
BENCHMARK(BM_XiWeight)->Args({1, 6})->Args({2, 6})->Args({3, 6})->Args({2, 12});

}  // namespace

BENCHMARK_MAIN();
