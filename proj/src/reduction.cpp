#include "ppq/reduction.hpp"

#include <algorithm>

#include "ppq/error.hpp"
#include "ppq/kernels.hpp"

namespace ppq {
namespace {

void check_points(const Graph& graph, NodeId f, NodeId t) {
  if (index(f) >= graph.node_count() || index(t) >= graph.node_count()) {
    throw Error(ErrorCode::invalid_argument, "query point is not in the graph");
  }
  if (f == t) throw Error(ErrorCode::invalid_argument, "points must be distinct");
}

ReducedGraph induced(const Graph& graph, std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  ReducedGraph out;
  out.nodes = std::move(nodes);
  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edge(e);
    if (out.contains(edge.a) && out.contains(edge.b)) out.edges.push_back(e);
  }
  return out;
}

}  // namespace

bool ReducedGraph::contains(NodeId x) const { return std::binary_search(nodes.begin(), nodes.end(), x); }

std::uint64_t sdeg(const HyperGraph& h, const NodeSet& set, std::uint32_t n) {
  std::uint64_t total = 0;
  for (auto m : h.adjacency().row(n)) {
    if (set.at(m)) total += h.leaf_counts()[m];
  }
  return total;
}

NodeSet reduce_level(const HyperGraph& h, NodeSet set, NodeId f, NodeId t) {
  std::vector<std::uint8_t> keep_always(h.size(), 0);
  if (auto o = h.owner(f)) keep_always[*o] = 1;
  if (auto o = h.owner(t)) keep_always[*o] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    const auto surrounding = kernels::surrounding_degrees(h.adjacency(), set, h.leaf_counts());
    NodeSet next = set;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (set[i] && !keep_always[i] && surrounding[i] <= 1) {
        next[i] = 0;
        changed = true;
      }
    }
    set = std::move(next);
  }
  return set;
}

ReducedGraph reduce(const ClusterHierarchy& hierarchy, NodeId f, NodeId t, const Graph& graph) {
  check_points(graph, f, t);
  std::size_t level = hierarchy.top_level_index();
  std::vector<std::uint32_t> alive(hierarchy.level(level).size());
  for (std::uint32_t i = 0; i < alive.size(); ++i) alive[i] = i;

  while (true) {
    // The surviving nodes of this level, as a hypergraph of their own.
    std::vector<HyperNode> nodes;
    nodes.reserve(alive.size());
    for (auto i : alive) nodes.push_back(hierarchy.level(level)[i]);
    HyperGraph h(graph, std::move(nodes));
    const auto kept = reduce_level(h, h.full_set(), f, t);

    std::vector<std::uint32_t> survivors;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (kept[i]) survivors.push_back(alive[i]);
    }
    if (level == 0) {
      std::vector<NodeId> out;
      for (auto i : survivors) out.push_back(node_id(i));
      return induced(graph, std::move(out));
    }
    alive.clear();
    for (auto i : survivors) {
      const auto& members = hierarchy.level(level)[i].members;
      alive.insert(alive.end(), members.begin(), members.end());
    }
    std::sort(alive.begin(), alive.end());
    --level;
  }
}

ReducedGraph reduce(const Graph& graph, NodeId f, NodeId t) {
  check_points(graph, f, t);
  std::vector<HyperNode> leaves;
  for (std::size_t i = 0; i < graph.node_count(); ++i) leaves.push_back(HyperNode::leaf(node_id(i)));
  HyperGraph h(graph, std::move(leaves));
  const auto kept = reduce_level(h, h.full_set(), f, t);
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i]) out.push_back(node_id(i));
  }
  return induced(graph, std::move(out));
}

}  // namespace ppq
