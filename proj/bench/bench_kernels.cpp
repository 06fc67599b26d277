// Serial reference kernels against their OpenMP counterparts on large random
// levels. Run with OMP_NUM_THREADS to vary the thread count.

#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "ppq/kernels.hpp"

namespace k = ppq::kernels;

namespace {

struct Level {
  k::Adjacency adj;
  std::vector<std::uint8_t> mask;
  std::vector<std::uint32_t> deg;
  std::vector<std::uint64_t> weight;
};

const Level& level(std::size_t n) {
  static std::vector<std::pair<std::size_t, Level>> cache;
  for (const auto& [size, l] : cache) {
    if (size == n) return l;
  }
  std::mt19937_64 rng(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uniform_int_distribution<std::uint32_t> any(0, static_cast<std::uint32_t>(n - 1));
  for (std::size_t i = 0; i < 4 * n; ++i) edges.emplace_back(any(rng), any(rng));
  std::vector<std::uint32_t> owner(n);
  for (std::uint32_t i = 0; i < n; ++i) owner[i] = i;
  Level l;
  l.adj = k::build_adjacency(edges, owner, n);
  l.mask.assign(n, 1);
  for (std::size_t i = 0; i < n; i += 7) l.mask[i] = 0;
  l.deg = k::reference::degrees(l.adj, l.mask);
  l.weight.resize(n);
  for (auto& w : l.weight) w = 1 + rng() % 8;
  cache.emplace_back(n, std::move(l));
  return cache.back().second;
}

template <auto Kernel>
void degrees(benchmark::State& state) {
  const auto& l = level(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(l.adj, l.mask));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void normalised(benchmark::State& state) {
  const auto& l = level(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(l.adj, l.mask, l.deg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void surrounding(benchmark::State& state) {
  const auto& l = level(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(l.adj, l.mask, l.weight));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

#define PPQ_PAIR(name, parallel, serial)                                                  \
  BENCHMARK(name<serial>)->Name(#name "/serial")->RangeMultiplier(8)->Range(1 << 12, 1 << 21); \
  BENCHMARK(name<parallel>)->Name(#name "/openmp")->RangeMultiplier(8)->Range(1 << 12, 1 << 21)

PPQ_PAIR(degrees, k::degrees, k::reference::degrees);
PPQ_PAIR(normalised, k::normalised_degrees, k::reference::normalised_degrees);
PPQ_PAIR(surrounding, k::surrounding_degrees, k::reference::surrounding_degrees);

BENCHMARK_MAIN();
