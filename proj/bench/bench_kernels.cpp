#include <benchmark/benchmark.h>

#include "graded/analysis.hpp"
#include "graded/builders.hpp"
#include "graded/oracle.hpp"

using namespace graded;

namespace {

ExecMode mode_of(const benchmark::State& state) { return state.range(0) ? ExecMode::Parallel : ExecMode::Serial; }

void BM_EnumerateSubspaces(benchmark::State& state) {
  PrimeField f2(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(7, f2, 1u << 24, mode_of(state)));
}
BENCHMARK(BM_EnumerateSubspaces)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ValidateAlgebra(benchmark::State& state) {
  auto a = galois_skew_example(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(validate_algebra(a, mode_of(state)));
}
BENCHMARK(BM_ValidateAlgebra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SubBimodules(benchmark::State& state) {
  auto a = group_algebra(PrimeField(2), FiniteGroup::cyclic(6));
  OracleOptions opts;
  opts.mode = mode_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sub_bimodules(a, opts));
}
BENCHMARK(BM_SubBimodules)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheckControlled(benchmark::State& state) {
  auto a = galois_skew_example(2, 3);
  SearchOptions opts;
  opts.mode = mode_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(check_controlled(a, opts));
}
BENCHMARK(BM_CheckControlled)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CrossedProduct(benchmark::State& state) {
  auto a = galois_skew_example(2, 4);
  SearchOptions opts;
  opts.mode = mode_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(detect_crossed_product(a, opts));
}
BENCHMARK(BM_CrossedProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
