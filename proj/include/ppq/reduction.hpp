#pragma once

#include <cstdint>
#include <vector>

#include "ppq/clustering.hpp"
#include "ppq/graph.hpp"

namespace ppq {

/// The nodes (and induced edges) left after pruning everything that cannot
/// lie on a simple path between the two query points.
struct ReducedGraph {
  std::vector<NodeId> nodes;      // sorted
  std::vector<EdgeIndex> edges;   // every graph edge with both ends in `nodes`

  bool contains(NodeId x) const;
};

/// SDeg(N, n): number of original nodes inside the neighbours of n within N.
std::uint64_t sdeg(const HyperGraph& h, const NodeSet& set, std::uint32_t n);

/// Repeatedly drops every node of `set` whose surroundings hold at most one
/// original node and which contains neither f nor t, until nothing changes.
NodeSet reduce_level(const HyperGraph& h, NodeSet set, NodeId f, NodeId t);

/// Prunes top-down through the hierarchy: reduce the top level, replace each
/// surviving cluster by its members, and repeat down to level 0. Throws
/// Error(invalid_argument) if f or t is not a node or f == t.
ReducedGraph reduce(const ClusterHierarchy& hierarchy, NodeId f, NodeId t, const Graph& graph);

/// Without a hierarchy: a single reduce_level pass over the original nodes,
/// i.e. plain leaf pruning.
ReducedGraph reduce(const Graph& graph, NodeId f, NodeId t);

}  // namespace ppq
