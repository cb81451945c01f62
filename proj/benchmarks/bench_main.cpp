#include "pbraid/closure.hpp"
#include "pbraid/desingularization.hpp"
#include "pbraid/garside.hpp"
#include "pbraid/markov.hpp"
#include "pbraid/rewriting.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

namespace {

pbraid::Word random_word(int n, std::size_t len, std::size_t pres, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<pbraid::Letter> letters;
  for (std::size_t k = 0; k < len; ++k) {
    const int i = index(rng);
    if (k < pres)
      letters.push_back(pbraid::pre(i));
    else
      letters.push_back(coin(rng) ? pbraid::sigma(i) : pbraid::sigma_inv(i));
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return pbraid::Word(n, std::move(letters));
}

void BM_NormalForm(benchmark::State &state) {
  const auto w = random_word(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)), 0, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(pbraid::normal_form(w));
}
BENCHMARK(BM_NormalForm)->ArgsProduct({{3, 6, 10}, {16, 64, 256}});

void BM_Eta(benchmark::State &state) {
  const auto w = random_word(4, 16, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(pbraid::eta(w));
}
BENCHMARK(BM_Eta)->DenseRange(0, 10, 2);

void BM_BfsReachable(benchmark::State &state) {
  const auto w = random_word(3, 4, 2, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(pbraid::bfs_reachable(w, static_cast<int>(state.range(0)), 8));
}
BENCHMARK(BM_BfsReachable)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_LinkingProfile(benchmark::State &state) {
  const auto w = random_word(4, 20, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(pbraid::linking_profile(w));
}
BENCHMARK(BM_LinkingProfile)->DenseRange(0, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_MarkovSearch(benchmark::State &state) {
  const auto from = pbraid::parse("p1 s1", 2);
  const auto to = pbraid::parse("s2 p1 s1 S2", 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(pbraid::markov_search(from, to, {.move_budget = static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_MarkovSearch)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
