// Serial reference against OpenMP kernels. Argument 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "highergpd/homology.hpp"
#include "highergpd/kan.hpp"
#include "highergpd/nerve_bar.hpp"

using namespace hgpd;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

const DoubleGroupoid& pair2() {
  static const DoubleGroupoid d = pair2_fixture();
  return d;
}

const TruncSimplicialSet& pair2_bar4() {
  static const TruncSimplicialSet x = WbarModel(pair2(), 4).simplicial();
  return x;
}

void BM_ValidateDoubleGroupoid(benchmark::State& state) {
  const DoubleGroupoid d = pair_double_groupoid(pair_groupoid(3));
  for (auto _ : state) benchmark::DoNotOptimize(validate_double_groupoid(d, exec_of(state)));
}

void BM_DoubleNerve(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(double_nerve_with_elements(pair2(), BidegreeRange::box(3), exec_of(state)));
}

void BM_ValidateBisimplicial(benchmark::State& state) {
  const TruncBisimplicialSet x = double_nerve(pair2(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(validate_bisimplicial(x, exec_of(state)));
}

void BM_Bar(benchmark::State& state) {
  const TruncBisimplicialSet x = double_nerve(pair2(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(bar_with_components(x, 4, exec_of(state)));
}

void BM_ValidateSimplicial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(validate_simplicial(pair2_bar4(), exec_of(state)));
}

void BM_Horns(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(horns(pair2_bar4(), 4, 2, exec_of(state)));
}

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(pair2_bar4(), 2, exec_of(state)));
}

void BM_Homology(benchmark::State& state) {
  const ChainComplex c = chains(bar(double_nerve(pair2(), 4), 4));
  for (auto _ : state) benchmark::DoNotOptimize(homology(c, 3, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_ValidateDoubleGroupoid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DoubleNerve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateBisimplicial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateSimplicial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Horns)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Homology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
