#include <benchmark/benchmark.h>

#include "rotposet/rotposet.hpp"

namespace {

using namespace rotposet;

// Equivalent pairs, so that every triple is inspected.
std::vector<std::pair<Poset, Poset>> sample_pairs(std::size_t n, std::size_t count) {
  std::vector<std::pair<Poset, Poset>> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    const Poset p = random_poset(n, 0.3, i);
    pairs.emplace_back(p, rotate_to_unique_max(p, i % n));
  }
  return pairs;
}

void BM_AreEquivalent(benchmark::State& state) {
  const auto pairs = sample_pairs(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(are_equivalent(p, q));
  }
}
BENCHMARK(BM_AreEquivalent)->Arg(5)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_OracleEquivalent(benchmark::State& state) {
  const auto pairs = sample_pairs(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(oracle_equivalent(p, q));
  }
}
BENCHMARK(BM_OracleEquivalent)->Arg(4)->Arg(5)->Arg(6);

void BM_FindRotation(benchmark::State& state) {
  const auto pairs = sample_pairs(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [p, q] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(find_rotation(p, q));
  }
}
BENCHMARK(BM_FindRotation)->Arg(8)->Arg(32)->Arg(64);

void BM_CanonicalForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Poset> posets;
  for (std::uint64_t s = 0; s < 16; ++s) posets.push_back(random_poset(n, 0.3, s));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(posets[i++ % posets.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(8)->Arg(10);

void BM_EnumerateClass(benchmark::State& state) {
  const Poset p = Poset::antichain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(p).labeled_size());
}
BENCHMARK(BM_EnumerateClass)->Arg(4)->Arg(5)->Arg(6);

void BM_ClassStats(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(class_stats(4, 5, static_cast<std::size_t>(state.range(0))).classes.size());
}
BENCHMARK(BM_ClassStats)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
