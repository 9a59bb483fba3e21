#include <benchmark/benchmark.h>

#include "platek/corpus.hpp"
#include "platek/denot.hpp"
#include "platek/model.hpp"
#include "platek/optree.hpp"
#include "platek/parser.hpp"
#include "platek/pretty.hpp"

using namespace platek;

namespace {

const char* kAdd =
    "fix add:0->0->0. \\x:0. \\y:0. case x y (suc (add (pred x) y))";

OracleTable& oracle_table() {
  static OracleRegistry reg = OracleRegistry::builtins();
  static OracleTable table = [] {
    OracleTable t;
    t.registry = &reg;
    return t;
  }();
  return table;
}

}  // namespace

static void BM_ParsePretty(benchmark::State& state) {
  std::string src = std::string("(") + kAdd + ") 3 4";
  for (auto _ : state) {
    Term t = parse(src);
    benchmark::DoNotOptimize(pretty(t));
  }
}
BENCHMARK(BM_ParsePretty);

static void BM_EvalOpAdd(benchmark::State& state) {
  Term t = parse(std::string("(") + kAdd + ") " +
                 std::to_string(state.range(0)) + " " +
                 std::to_string(state.range(0)));
  EvalSettings s;
  s.fuel = 100000;
  for (auto _ : state) {
    EvalReport r = eval_op(t, s, oracle_table());
    benchmark::DoNotOptimize(r.outcome.value);
  }
}
BENCHMARK(BM_EvalOpAdd)->Arg(4)->Arg(16)->Arg(64);

static void BM_EvalOpDivergenceFuel(benchmark::State& state) {
  Term t = parse("fix x:0. x");
  EvalSettings s;
  s.fuel = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    EvalReport r = eval_op(t, s, oracle_table());
    benchmark::DoNotOptimize(r.steps_used);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalOpDivergenceFuel)->Arg(1000)->Arg(10000);

static void BM_EvalFinCorpusTerm(benchmark::State& state) {
  Model m({1, 1'000'000});
  Term t = parse("#exists2 (\\n:0. case n 1 0)");
  for (auto _ : state) {
    DomainElement v = eval_fin(t, {}, m, oracle_table());
    benchmark::DoNotOptimize(v.is_nat());
  }
}
BENCHMARK(BM_EvalFinCorpusTerm);

static void BM_CheckEquiv(benchmark::State& state) {
  Model m({1, 1'000'000});
  Term t = parse("#mu (\\n:0. case n 1 0)");
  for (auto _ : state) {
    AgreementReport r = check_equiv(t, m, oracle_table(), 10000);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_CheckEquiv);

static void BM_EnumeratePartialRank2(benchmark::State& state) {
  for (auto _ : state) {
    Model m({1, 1'000'000});
    const auto& elems = m.enumerate_partial(
        Type::arrow(Type::arrow(Type::base(), Type::base()), Type::base()));
    benchmark::DoNotOptimize(elems.size());
  }
}
BENCHMARK(BM_EnumeratePartialRank2);

static void BM_StreamSelfMaps(benchmark::State& state) {
  // streaming enumeration of HC((0->0)->(0->0)), counting only
  Model m({1, 1'000'000});
  Type self = Type::arrow(Type::arrow(Type::base(), Type::base()),
                          Type::arrow(Type::base(), Type::base()));
  for (auto _ : state) {
    std::uint64_t count = 0;
    m.for_each_partial(self, [&](const DomainElement&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_StreamSelfMaps);

BENCHMARK_MAIN();
