#include <benchmark/benchmark.h>

#include "treehopf/arborification.hpp"
#include "treehopf/bck.hpp"
#include "treehopf/enumerate.hpp"
#include "treehopf/hairer_kelly.hpp"
#include "treehopf/prelie.hpp"
#include "treehopf/qshuffle.hpp"
#include "treehopf/substitution.hpp"
#include "treehopf/textio.hpp"

using namespace treehopf;

static void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_trees(n, {"a", "b"}));
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(4)->Arg(5)->Arg(6);

static void BM_BckCoproduct(benchmark::State& state) {
  auto forests = enumerate_forests_up_to(static_cast<int>(state.range(0)), {"o"});
  for (auto _ : state) {
    for (const Forest& f : forests) benchmark::DoNotOptimize(bck_coproduct(f));
  }
}
BENCHMARK(BM_BckCoproduct)->Arg(4)->Arg(5);

static void BM_SubCoproduct(benchmark::State& state) {
  const Semigroup sg = Semigroup::free();
  auto trees = enumerate_trees_up_to(static_cast<int>(state.range(0)), {"a", "b"});
  for (auto _ : state) {
    for (const Tree& t : trees) benchmark::DoNotOptimize(sub_coproduct(t, sg));
  }
}
BENCHMARK(BM_SubCoproduct)->Arg(4)->Arg(5);

static void BM_QuasiShuffle(benchmark::State& state) {
  const Semigroup sg = Semigroup::free();
  const Word u = parse_word("a.b.a");
  const Word v = parse_word("b.a.b");
  for (auto _ : state) {
    benchmark::DoNotOptimize(quasi_shuffle(u, v, sg));
  }
}
BENCHMARK(BM_QuasiShuffle);

static void BM_GlProduct(benchmark::State& state) {
  auto forests = enumerate_forests_up_to(3, {"o"});
  for (auto _ : state) {
    for (const Forest& f : forests) {
      for (const Forest& g : forests) benchmark::DoNotOptimize(gl_product(f, g));
    }
  }
}
BENCHMARK(BM_GlProduct);

static void BM_ArboHoffmanDiagram(benchmark::State& state) {
  const Semigroup sg = Semigroup::free();
  auto trees = enumerate_trees(static_cast<int>(state.range(0)), {"a", "b"});
  for (auto _ : state) {
    for (const Tree& t : trees) {
      auto lhs = contract_arborify(arbo_hoffman_exp(Forest(t), sg), sg);
      auto rhs = hoffman_exp(arborify(t), sg);
      benchmark::DoNotOptimize(lhs == rhs);
    }
  }
}
BENCHMARK(BM_ArboHoffmanDiagram)->Arg(4)->Arg(5);

static void BM_HkFlowResidual(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hk_flow_identity_residual(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_HkFlowResidual)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
