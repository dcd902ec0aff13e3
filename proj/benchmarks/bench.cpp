#include <benchmark/benchmark.h>

#include <random>

#include "tvb/corpus.hpp"
#include "tvb/cox.hpp"
#include "tvb/linalg.hpp"
#include "tvb/matroid.hpp"
#include "tvb/positivity.hpp"

using namespace tvb;

namespace {

QMat random_matrix(size_t rows, size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 9);
  QMat m(rows, QVec(cols));
  for (auto& r : m)
    for (auto& c : r) c = Rational(num(rng), den(rng));
  return m;
}

void BM_rref(benchmark::State& state) {
  std::mt19937 rng(12345);
  const size_t n = static_cast<size_t>(state.range(0));
  QMat m = random_matrix(n, n + 2, rng);
  for (auto _ : state) {
    QMat copy = m;
    benchmark::DoNotOptimize(rref_inplace(copy));
  }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_sym_power(benchmark::State& state) {
  ToricVectorBundle e = corpus_example_big();
  const size_t k = static_cast<size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sym_power(e, k));
}
BENCHMARK(BM_sym_power)->Arg(2)->Arg(3)->Arg(4);

void BM_parliament(benchmark::State& state) {
  ToricVectorBundle e = corpus_surface(3);
  for (auto _ : state) benchmark::DoNotOptimize(parliament(e));
}
BENCHMARK(BM_parliament);

void BM_frak_M(benchmark::State& state) {
  ToricVectorBundle e = corpus_example_big();
  const size_t kmax = static_cast<size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frak_M(e, kmax));
}
BENCHMARK(BM_frak_M)->Arg(2)->Arg(3);

void BM_is_ample(benchmark::State& state) {
  ToricVectorBundle e = corpus_surface(3);
  for (auto _ : state) benchmark::DoNotOptimize(is_ample(e));
}
BENCHMARK(BM_is_ample);

void BM_h0_dim(benchmark::State& state) {
  ToricVectorBundle e = sym_power(corpus_tp2(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(h0_dim(e));
}
BENCHMARK(BM_h0_dim);

}  // namespace

BENCHMARK_MAIN();
