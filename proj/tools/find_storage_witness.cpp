// Searches simple graphs on a fixed number of nodes for the one whose
// cluster hierarchy stores the most hypernodes, and compares the maximum with
// the n·k - k² + k + 1 worst-case bound. Prints the first (smallest edge
// mask) graph attaining the maximum so it can be frozen into tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppq/clustering.hpp"

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Pairs all_pairs(std::size_t n) {
  Pairs out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

bool connected(std::size_t n, const Pairs& pairs, std::uint64_t mask) {
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      const auto [a, b] = pairs[k];
      if (frontier >> a & 1) next |= 1u << b;
      if (frontier >> b & 1) next |= 1u << a;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

std::size_t stored(std::size_t n, const Pairs& pairs, std::uint64_t mask) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<ppq::Graph::EdgeSpec> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask >> k & 1) {
      edges.push_back({names[pairs[k].first], names[pairs[k].second], ppq::EdgeLabel::of_role("e" + std::to_string(k))});
    }
  }
  return ppq::hcluster(ppq::Graph::from_edges(names, edges)).total_stored();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for worst-case cluster-hierarchy storage"};
  std::size_t n = 7;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  app.add_option("-n,--nodes", n, "Number of nodes")->check(CLI::Range(2, 9));
  app.add_option("--random", samples, "Sample this many random edge sets instead of enumerating all");
  app.add_option("--seed", seed, "Seed for --random");
  CLI11_PARSE(app, argc, argv);

  const Pairs pairs = all_pairs(n);
  const std::uint64_t space = std::uint64_t{1} << pairs.size();
  std::vector<std::uint64_t> masks;
  if (samples > 0) {
    std::mt19937_64 rng(seed);
    masks.resize(samples);
    for (auto& m : masks) m = rng() & (space - 1);
  }
  const auto count = static_cast<std::int64_t>(samples > 0 ? samples : space);

  std::size_t best = 0;
  std::uint64_t witness = 0;
  std::uint64_t attaining = 0;
#pragma omp parallel
  {
    std::size_t local_best = 0;
    std::uint64_t local_witness = 0;
    std::uint64_t local_attaining = 0;
#pragma omp for schedule(dynamic, 1024) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const auto mask = samples > 0 ? masks[static_cast<std::size_t>(i)] : static_cast<std::uint64_t>(i);
      if (!connected(n, pairs, mask)) continue;
      const auto s = stored(n, pairs, mask);
      if (s > local_best || (s == local_best && mask < local_witness)) {
        if (s > local_best) local_attaining = 0;
        local_best = s;
        local_witness = mask;
      }
      if (s == local_best) ++local_attaining;
    }
#pragma omp critical
    {
      if (local_best > best || (local_best == best && local_witness < witness)) {
        if (local_best > best) attaining = 0;
        best = local_best;
        witness = local_witness;
      }
      if (local_best == best) attaining += local_attaining;
    }
  }

  std::cout << "nodes: " << n << "\nbound: " << ppq::storage_bound(n) << "\nmax stored: " << best
            << "\ngraphs attaining max: " << attaining << "\nwitness edges:";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (witness >> k & 1) std::cout << " {" << pairs[k].first << ", " << pairs[k].second << "},";
  }
  std::cout << '\n';
  return best <= ppq::storage_bound(n) ? 0 : 1;
}
