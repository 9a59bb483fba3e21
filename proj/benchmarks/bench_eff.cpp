#include <benchmark/benchmark.h>

#include "platek/corpus.hpp"
#include "platek/reductions.hpp"

#include "../tests/common/testgen.hpp"

using namespace platek;
using namespace platek::eff;
namespace red = platek::reductions;

static void BM_ClopenAlgebra(benchmark::State& state) {
  Rng rng(0xBE);
  ClopenSet a = testgen::random_nonempty_clopen(rng, 8);
  ClopenSet b = testgen::random_nonempty_clopen(rng, 8);
  for (auto _ : state) {
    ClopenSet u = ClopenSet::set_union(a, b);
    ClopenSet v = ClopenSet::set_intersect(a, b);
    benchmark::DoNotOptimize(u.measure() + v.measure());
  }
}
BENCHMARK(BM_ClopenAlgebra);

static void BM_SupUsco(benchmark::State& state) {
  Rng rng(0x50);
  StepFn f = testgen::random_usco_stepfn(rng, 8, 32);
  for (auto _ : state) {
    Rat r = red::sup_usco(f, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SupUsco)->Arg(10)->Arg(20)->Arg(40);

static void BM_Variation(benchmark::State& state) {
  Rng rng(0x7A);
  StepFn f = testgen::random_stepfn(rng, 12, 64);
  for (auto _ : state) benchmark::DoNotOptimize(f.variation());
}
BENCHMARK(BM_Variation);

static void BM_MeasureBisect(benchmark::State& state) {
  Rng rng(0xB1);
  IntervalUnion c = testgen::random_nonempty_closed_union(rng, 4, 16);
  for (auto _ : state) {
    Rat l = red::measure_bisect(c, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_MeasureBisect)->Arg(6)->Arg(10)->Arg(14);

static void BM_RmCodeOpen(benchmark::State& state) {
  Rng rng(0x2A);
  IntervalUnion o = testgen::random_union(rng, 4, 8, false);
  for (auto _ : state) {
    auto pairs = red::rm_code_open(o, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(pairs.size());
  }
}
BENCHMARK(BM_RmCodeOpen)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
