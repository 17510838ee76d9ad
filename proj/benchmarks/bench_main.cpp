#include <benchmark/benchmark.h>

#include "tlimm/classify.hpp"
#include "tlimm/immanant.hpp"
#include "tlimm/perm.hpp"
#include "tlimm/tl.hpp"

namespace {

using namespace tlimm;

void BM_ThetaOfLongestWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w0 = longest_word(n);
  for (auto _ : state) benchmark::DoNotOptimize(theta(w0));
}
BENCHMARK(BM_ThetaOfLongestWord)->DenseRange(3, 6);

void BM_ContainsPattern(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto all = all_permutations(n);
  const auto pattern = Permutation::parse("2143");
  for (auto _ : state)
    for (const auto& w : all) benchmark::DoNotOptimize(contains_pattern(w, pattern));
}
BENCHMARK(BM_ContainsPattern)->DenseRange(5, 7);

void BM_TlImmanant(benchmark::State& state) {
  const auto w = Permutation::parse("231564");
  (void)theta_table(6);
  for (auto _ : state) benchmark::DoNotOptimize(tl_immanant(w));
}
BENCHMARK(BM_TlImmanant);

void BM_Decompose(benchmark::State& state) {
  const auto w = build_case1(2, 1, 1, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(w, {.validate = false}));
}
BENCHMARK(BM_Decompose);

}  // namespace

BENCHMARK_MAIN();
