#include "ppq/kernels.hpp"

#include <algorithm>
#include <cstddef>

namespace ppq::kernels {

Adjacency build_adjacency(std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
                          std::span<const std::uint32_t> owner, std::size_t groups) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
  links.reserve(edges.size() * 2);
  for (auto [a, b] : edges) {
    const auto x = owner[a];
    const auto y = owner[b];
    if (x == kNoOwner || y == kNoOwner || x == y) continue;
    links.emplace_back(x, y);
    links.emplace_back(y, x);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());

  Adjacency adj;
  adj.offsets.assign(groups + 1, 0);
  adj.targets.reserve(links.size());
  for (auto [x, y] : links) {
    ++adj.offsets[x + 1];
    adj.targets.push_back(y);
  }
  for (std::size_t i = 0; i < groups; ++i) adj.offsets[i + 1] += adj.offsets[i];
  return adj;
}

std::vector<std::uint32_t> degrees(const Adjacency& adj, Mask mask) {
  const auto n = static_cast<std::ptrdiff_t>(adj.size());
  std::vector<std::uint32_t> out(adj.size(), 0);
#pragma omp parallel for schedule(static) if (adj.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    std::uint32_t d = 0;
    for (auto m : adj.row(i)) d += mask[m];
    out[i] = d;
  }
  return out;
}

std::vector<std::uint32_t> normalised_degrees(const Adjacency& adj, Mask mask,
                                              std::span<const std::uint32_t> deg) {
  const auto n = static_cast<std::ptrdiff_t>(adj.size());
  std::vector<std::uint32_t> out(adj.size(), 0);
#pragma omp parallel for schedule(static) if (adj.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    std::uint32_t d = 0;
    for (auto m : adj.row(i)) d += (mask[m] && deg[m] > 1) ? 1u : 0u;
    out[i] = d;
  }
  return out;
}

std::vector<std::uint64_t> surrounding_degrees(const Adjacency& adj, Mask mask,
                                               std::span<const std::uint64_t> weight) {
  const auto n = static_cast<std::ptrdiff_t>(adj.size());
  std::vector<std::uint64_t> out(adj.size(), 0);
#pragma omp parallel for schedule(static) if (adj.size() >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (!mask[i]) continue;
    std::uint64_t d = 0;
    for (auto m : adj.row(i)) d += mask[m] ? weight[m] : 0;
    out[i] = d;
  }
  return out;
}

namespace reference {

std::vector<std::uint32_t> degrees(const Adjacency& adj, Mask mask) {
  std::vector<std::uint32_t> out(adj.size(), 0);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (!mask[i]) continue;
    for (auto m : adj.row(i)) {
      if (mask[m]) ++out[i];
    }
  }
  return out;
}

std::vector<std::uint32_t> normalised_degrees(const Adjacency& adj, Mask mask,
                                              std::span<const std::uint32_t> deg) {
  std::vector<std::uint32_t> out(adj.size(), 0);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (!mask[i]) continue;
    for (auto m : adj.row(i)) {
      if (mask[m] && deg[m] > 1) ++out[i];
    }
  }
  return out;
}

std::vector<std::uint64_t> surrounding_degrees(const Adjacency& adj, Mask mask,
                                               std::span<const std::uint64_t> weight) {
  std::vector<std::uint64_t> out(adj.size(), 0);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (!mask[i]) continue;
    for (auto m : adj.row(i)) {
      if (mask[m]) out[i] += weight[m];
    }
  }
  return out;
}

}  // namespace reference
}  // namespace ppq::kernels
