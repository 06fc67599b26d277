#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ppq/graph.hpp"
#include "ppq/kernels.hpp"

namespace ppq {

/// A node of one hierarchy level: an original node at level 0, or a cluster
/// of nodes from the level below. `leaves` is every original node contained
/// in it, at any depth.
struct HyperNode {
  std::vector<NodeId> leaves;           // sorted
  std::vector<std::uint32_t> members;   // indices into the level below; empty at level 0

  static HyperNode leaf(NodeId x) { return {{x}, {}}; }

  bool operator==(const HyperNode&) const = default;
};

/// x ≺ n: the original node x equals n or lies somewhere inside it.
bool contained_in(NodeId x, const HyperNode& n);

/// n ↭ m: some original edge joins a node inside n to a node inside m.
/// Evaluated straight from the edge list.
bool reach(const HyperNode& n, const HyperNode& m, const Graph& graph);

/// Membership mask over the nodes of a HyperGraph.
using NodeSet = std::vector<std::uint8_t>;

/// The nodes of one level together with the unlabelled, deduplicated edges
/// they inherit from the original graph.
class HyperGraph {
 public:
  /// Leaf sets must be pairwise disjoint; throws Error(semantic) otherwise.
  HyperGraph(const Graph& graph, std::vector<HyperNode> nodes);

  const Graph& graph() const noexcept { return *graph_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const HyperNode& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<HyperNode>& nodes() const noexcept { return nodes_; }

  const kernels::Adjacency& adjacency() const noexcept { return adjacency_; }
  bool reach(std::size_t i, std::size_t j) const;
  /// |E| with E the set of unordered pairs {x, y}, x ≠ y, x ↭ y.
  std::size_t edge_count() const noexcept { return adjacency_.pair_count(); }
  /// Whether the nodes selected by `set` induce a connected hypergraph.
  bool connected(const NodeSet& set) const;
  bool connected() const { return connected(full_set()); }
  /// The node containing original node x, if any.
  std::optional<std::uint32_t> owner(NodeId x) const;
  /// Number of original nodes inside each node.
  const std::vector<std::uint64_t>& leaf_counts() const noexcept { return leaf_counts_; }
  /// Smallest original node inside each node (seed tie-break).
  NodeId first_leaf(std::size_t i) const { return nodes_.at(i).leaves.front(); }

  NodeSet full_set() const { return NodeSet(nodes_.size(), 1); }

 private:
  const Graph* graph_;
  std::vector<HyperNode> nodes_;
  std::vector<std::uint32_t> owner_;
  std::vector<std::uint64_t> leaf_counts_;
  kernels::Adjacency adjacency_;
};

/// Deg(N, n): members of N other than n reachable from n. Requires n ∈ N.
std::size_t deg(const HyperGraph& h, const NodeSet& set, std::uint32_t n);
/// NDeg(N, n): neighbours of n within N whose own Deg(N, ·) exceeds 1.
std::size_t ndeg(const HyperGraph& h, const NodeSet& set, std::uint32_t n);

/// A numbered family of node sets. Slots 1..capacity exist from the start
/// and begin empty; only non-empty slots count as clusters.
class Clustering {
 public:
  explicit Clustering(std::size_t capacity) : slots_(capacity) {}

  std::size_t capacity() const noexcept { return slots_.size(); }
  /// Slot i (1-based). Throws Error(invalid_argument) for an unknown index.
  const std::vector<std::uint32_t>& at(std::size_t i) const;
  /// Non-empty slots in index order.
  std::vector<std::vector<std::uint32_t>> clusters() const;
  /// |Dom(C)|: number of non-empty slots.
  std::size_t size() const noexcept;

  /// C ⊕ᵢ E: slot i grows by E (kept sorted, without duplicates); every other
  /// slot is unchanged. Throws Error(invalid_argument) for an unknown index.
  friend Clustering extend_cluster(Clustering c, std::size_t i, std::span<const std::uint32_t> extra);

 private:
  std::vector<std::vector<std::uint32_t>> slots_;
};

Clustering extend_cluster(Clustering c, std::size_t i, std::span<const std::uint32_t> extra);

/// Partitions the nodes selected by `set` into branch-free clusters.
///
/// Repeatedly seeds a new cluster with an unclustered node of minimal NDeg
/// (ties: smallest contained original node), then grows it to a fixpoint:
/// an unclustered node joins when it is adjacent to a member n' whose NDeg,
/// or whose Deg equals 1, in the context (unclustered ∪ cluster) allows it
/// (NDeg ≤ 2 or Deg = 1). Throws Error(invalid_argument) for an empty set and
/// Error(not_connected) when the selected nodes are not connected.
Clustering cluster(const HyperGraph& h, const NodeSet& set);
Clustering cluster(const HyperGraph& h);

/// Level 0 holds one leaf per original node; level i+1 holds one node per
/// cluster of level i. The top level is acyclic (|E| = |N| - 1).
class ClusterHierarchy {
 public:
  /// Checks that the levels form a valid hierarchy over `graph` (see
  /// check_hierarchy) and wraps them. Throws Error(compilation).
  static ClusterHierarchy from_levels(const Graph& graph, std::vector<std::vector<HyperNode>> levels);

  const std::vector<std::vector<HyperNode>>& levels() const noexcept { return levels_; }
  const std::vector<HyperNode>& level(std::size_t i) const { return levels_.at(i); }
  std::size_t level_count() const noexcept { return levels_.size(); }
  std::size_t top_level_index() const noexcept { return levels_.size() - 1; }
  /// Number of clustering steps taken (= top_level_index()).
  std::size_t steps() const noexcept { return levels_.size() - 1; }
  /// Hypernodes stored across all levels, level 0 included.
  std::size_t total_stored() const noexcept;

  bool operator==(const ClusterHierarchy&) const = default;

 private:
  friend ClusterHierarchy hcluster(const Graph& graph);
  explicit ClusterHierarchy(std::vector<std::vector<HyperNode>> levels) : levels_(std::move(levels)) {}

  std::vector<std::vector<HyperNode>> levels_;
};

/// Clusters level after level until the hypergraph is acyclic. Throws
/// Error(invalid_argument) for an empty graph and Error(not_connected) for a
/// disconnected one.
ClusterHierarchy hcluster(const Graph& graph);

/// Structural checks shared by the loader and the tests: level 0 is exactly
/// the original nodes, each higher level partitions the level below, leaf
/// sets agree with member sets, no member has NDeg > 2 inside its cluster,
/// every level is connected, each level with
/// more than two nodes shrinks by at least two, and only the top level is
/// acyclic. Throws Error(compilation) describing the first violation.
void check_hierarchy(const Graph& graph, const std::vector<std::vector<HyperNode>>& levels);

/// Worst-case hypernode count over all levels for a graph of n nodes:
/// n·k - k² + k + 1 with k = ⌊n/2⌋.
std::size_t storage_bound(std::size_t n) noexcept;

}  // namespace ppq
