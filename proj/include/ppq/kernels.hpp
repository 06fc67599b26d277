#pragma once

// Per-node degree computations over one level of the cluster hierarchy.
//
// Every kernel has an OpenMP version in ppq::kernels and a plain serial
// version in ppq::kernels::reference; the two must agree element for element
// (checked by the kernel tests, timed against each other by bench/).

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace ppq::kernels {

inline constexpr std::uint32_t kNoOwner = std::numeric_limits<std::uint32_t>::max();

/// Below this many rows the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 4096;

/// Membership flags, one byte per row (0 = outside the context set).
using Mask = std::span<const std::uint8_t>;

/// Compressed, deduplicated adjacency between groups of original nodes.
struct Adjacency {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> targets;

  std::size_t size() const noexcept { return offsets.size() - 1; }
  std::span<const std::uint32_t> row(std::size_t i) const noexcept {
    return std::span<const std::uint32_t>(targets).subspan(offsets[i], offsets[i + 1] - offsets[i]);
  }
  /// Number of distinct unordered neighbour pairs.
  std::size_t pair_count() const noexcept { return targets.size() / 2; }
};

/// Groups original nodes by `owner` (kNoOwner = dropped) and links two groups
/// when some original edge runs between them. Rows are sorted; a group is
/// never its own neighbour.
Adjacency build_adjacency(std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
                          std::span<const std::uint32_t> owner, std::size_t groups);

/// out[i] = |{m in mask : m adjacent to i}| for i in mask, 0 otherwise.
std::vector<std::uint32_t> degrees(const Adjacency& adj, Mask mask);

/// out[i] = |{m in mask : deg[m] > 1, m adjacent to i}| for i in mask.
std::vector<std::uint32_t> normalised_degrees(const Adjacency& adj, Mask mask,
                                              std::span<const std::uint32_t> deg);

/// out[i] = sum of weight[m] over masked neighbours m of i, for i in mask.
std::vector<std::uint64_t> surrounding_degrees(const Adjacency& adj, Mask mask,
                                               std::span<const std::uint64_t> weight);

namespace reference {

std::vector<std::uint32_t> degrees(const Adjacency& adj, Mask mask);
std::vector<std::uint32_t> normalised_degrees(const Adjacency& adj, Mask mask,
                                              std::span<const std::uint32_t> deg);
std::vector<std::uint64_t> surrounding_degrees(const Adjacency& adj, Mask mask,
                                               std::span<const std::uint64_t> weight);

}  // namespace reference
}  // namespace ppq::kernels
