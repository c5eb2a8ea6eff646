#include <benchmark/benchmark.h>

#include "garside/builtins.hpp"
#include "garside/quasicenter.hpp"

namespace {

using namespace garside;

void BM_BraidGerm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(braid_germ(n));
  state.SetLabel(std::to_string(braid_germ(n).size()) + " simples");
}
BENCHMARK(BM_BraidGerm)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ValidateFull(benchmark::State& state) {
  GermData d = braid_germ(static_cast<int>(state.range(0))).data();
  for (auto _ : state) benchmark::DoNotOptimize(validate(d, true));
}
BENCHMARK(BM_ValidateFull)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_AtomClasses(benchmark::State& state) {
  Germ g = free_abelian_germ(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(atom_classes(g));
}
BENCHMARK(BM_AtomClasses)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace
