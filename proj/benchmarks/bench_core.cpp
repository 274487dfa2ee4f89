#include <benchmark/benchmark.h>

#include "brauerc/creps.hpp"
#include "brauerc/diagrams.hpp"
#include "brauerc/hom.hpp"
#include "brauerc/split.hpp"

using namespace brauerc;

static void BM_DiagramMultiplyAllPairs(benchmark::State& state) {
  auto basis = enumerate_basis(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& a : basis)
      for (const auto& b : basis) benchmark::DoNotOptimize(multiply(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(basis.size() * basis.size()));
}
BENCHMARK(BM_DiagramMultiplyAllPairs)->Arg(2)->Arg(3);

static void BM_EnumerateBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateBasis)->Arg(3)->Arg(4);

static void BM_HomSpacePermModules(benchmark::State& state) {
  BrauerPtr b = brauer_c_algebra(2, FieldSpec::make(5, "1"));
  Module m = perm_module_B(CellIndex::parse("(0,1|1)"), b, SignPlacement::first);
  Module n = perm_module_B(CellIndex::parse("(0,-|1,1)"), b, SignPlacement::first);
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(m, n));
}
BENCHMARK(BM_HomSpacePermModules);

static void BM_SplitRegularModule(benchmark::State& state) {
  BrauerPtr b = brauer_c_algebra(2, FieldSpec::make(5, "1"));
  Module reg = Module::regular(b);
  for (auto _ : state) benchmark::DoNotOptimize(split_indecomposables(reg));
}
BENCHMARK(BM_SplitRegularModule);

BENCHMARK_MAIN();
