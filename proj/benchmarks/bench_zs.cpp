#include <benchmark/benchmark.h>

#include "garside/automata.hpp"
#include "garside/builtins.hpp"
#include "garside/normal_forms.hpp"
#include "garside/verify/enumerate.hpp"

namespace {

using namespace garside;

ZSStructure product_structure() {
  Germ k = germ_from_spec("prod:braid:4,braid:3");
  return ZSStructure::build(k, {k.require("s1"), k.require("s2"), k.require("s3")});
}

void BM_BuildStructure(benchmark::State& state) {
  Germ k = germ_from_spec("prod:braid:4,braid:3");
  std::vector<SimpleId> left{k.require("s1"), k.require("s2"), k.require("s3")};
  for (auto _ : state) benchmark::DoNotOptimize(ZSStructure::build(k, left));
}
BENCHMARK(BM_BuildStructure)->Unit(benchmark::kMillisecond);

void BM_SplitMerge(benchmark::State& state) {
  ZSStructure zs = product_structure();
  const Germ& k = zs.germ();
  auto words = verify::normal_words(k, static_cast<std::uint64_t>(state.range(0)));
  std::vector<NormalWord> nfs;
  for (const Word& w : words) nfs.push_back(from_left_weighted(k, w));
  std::size_t i = 0;
  for (auto _ : state) {
    const NormalWord& n = nfs[i++ % nfs.size()];
    benchmark::DoNotOptimize(merge_nf(zs, split_nf(zs, n, false), false));
  }
  state.SetLabel(std::to_string(nfs.size()) + " inputs");
}
BENCHMARK(BM_SplitMerge)->Arg(4)->Arg(6);

void BM_WreathSplitMerge(benchmark::State& state) {
  Germ k = wreath_germ();
  ZSStructure zs = ZSStructure::build(k, {k.require("a"), k.require("b")});
  auto words = verify::normal_words(k, 6);
  std::vector<NormalWord> nfs;
  for (const Word& w : words) nfs.push_back(from_left_weighted(k, w));
  std::size_t i = 0;
  for (auto _ : state) {
    const NormalWord& n = nfs[i++ % nfs.size()];
    benchmark::DoNotOptimize(merge_nf(zs, split_nf(zs, n, false), false));
  }
}
BENCHMARK(BM_WreathSplitMerge);

void BM_TranslateAutomaton(benchmark::State& state) {
  ZSStructure zs = product_structure();
  NFAutomaton ag = build_nf_automaton(zs.factor_germ(Side::G), AutomatonVariant::full);
  NFAutomaton ah = build_nf_automaton(zs.factor_germ(Side::H), AutomatonVariant::full);
  for (auto _ : state) benchmark::DoNotOptimize(translate_pair_to_product(zs, ag, ah));
}
BENCHMARK(BM_TranslateAutomaton)->Unit(benchmark::kMillisecond);

void BM_CountAccepted(benchmark::State& state) {
  NFAutomaton a = build_nf_automaton(braid_germ(5), AutomatonVariant::proper);
  for (auto _ : state) benchmark::DoNotOptimize(count_accepted(a, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountAccepted)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace
