#include <benchmark/benchmark.h>

#include <random>

#include "garside/builtins.hpp"
#include "garside/element.hpp"
#include "garside/verify/enumerate.hpp"

namespace {

using namespace garside;

std::vector<Word> random_words(const Germ& g, std::size_t count, std::size_t letters) {
  std::mt19937_64 rng(7);
  std::vector<SimpleId> atoms = g.atoms();
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  std::vector<Word> out(count);
  for (Word& w : out) {
    for (std::size_t i = 0; i < letters; ++i) w.push_back(atoms[pick(rng)]);
  }
  return out;
}

void BM_NormalForm(benchmark::State& state) {
  Germ g = braid_germ(static_cast<int>(state.range(0)));
  auto words = random_words(g, 64, static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(g, words[i++ % words.size()]));
}
BENCHMARK(BM_NormalForm)->Args({4, 16})->Args({4, 64})->Args({5, 64})->Args({6, 128});

void BM_Lcm(benchmark::State& state) {
  Germ g = braid_germ(static_cast<int>(state.range(0)));
  auto words = random_words(g, 64, 24);
  std::vector<Element> els;
  for (const Word& w : words) els.push_back(Element::from_word(g, w));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lcm(g, els[i % els.size()], els[(i + 1) % els.size()]));
    ++i;
  }
}
BENCHMARK(BM_Lcm)->Arg(4)->Arg(5);

void BM_Gcd(benchmark::State& state) {
  Germ g = braid_germ(static_cast<int>(state.range(0)));
  auto words = random_words(g, 64, 24);
  std::vector<Element> els;
  for (const Word& w : words) els.push_back(Element::from_word(g, w));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcd(g, els[i % els.size()], els[(i + 1) % els.size()]));
    ++i;
  }
}
BENCHMARK(BM_Gcd)->Arg(4)->Arg(5);

}  // namespace
