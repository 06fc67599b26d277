#include "ppq/clustering.hpp"

#include <algorithm>
#include <string>

#include "ppq/error.hpp"

namespace ppq {
namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_pairs(const Graph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    out.emplace_back(static_cast<std::uint32_t>(index(e.a)), static_cast<std::uint32_t>(index(e.b)));
  }
  return out;
}

[[noreturn]] void bad_hierarchy(const std::string& message) {
  throw Error(ErrorCode::compilation, "invalid cluster hierarchy: " + message);
}

}  // namespace

bool contained_in(NodeId x, const HyperNode& n) {
  return std::binary_search(n.leaves.begin(), n.leaves.end(), x);
}

bool reach(const HyperNode& n, const HyperNode& m, const Graph& graph) {
  for (const auto& e : graph.edges()) {
    if ((contained_in(e.a, n) && contained_in(e.b, m)) || (contained_in(e.b, n) && contained_in(e.a, m))) {
      return true;
    }
  }
  return false;
}

HyperGraph::HyperGraph(const Graph& graph, std::vector<HyperNode> nodes)
    : graph_(&graph), nodes_(std::move(nodes)), owner_(graph.node_count(), kernels::kNoOwner) {
  leaf_counts_.reserve(nodes_.size());
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    auto& leaves = nodes_[i].leaves;
    if (leaves.empty()) throw Error(ErrorCode::semantic, "hypernode without leaves");
    std::sort(leaves.begin(), leaves.end());
    for (NodeId x : leaves) {
      if (index(x) >= owner_.size()) throw Error(ErrorCode::semantic, "hypernode leaf outside the graph");
      if (owner_[index(x)] != kernels::kNoOwner) {
        throw Error(ErrorCode::semantic, "node '" + graph.name(x) + "' lies in two hypernodes");
      }
      owner_[index(x)] = i;
    }
    leaf_counts_.push_back(leaves.size());
  }
  adjacency_ = kernels::build_adjacency(edge_pairs(graph), owner_, nodes_.size());
}

bool HyperGraph::reach(std::size_t i, std::size_t j) const {
  auto row = adjacency_.row(i);
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(j));
}

bool HyperGraph::connected(const NodeSet& set) const {
  auto first = std::find(set.begin(), set.end(), 1);
  if (first == set.end()) return true;
  std::vector<std::uint8_t> seen(nodes_.size(), 0);
  std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(first - set.begin())};
  seen[stack.back()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : adjacency_.row(x)) {
      if (set[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == static_cast<std::size_t>(std::count(set.begin(), set.end(), 1));
}

std::optional<std::uint32_t> HyperGraph::owner(NodeId x) const {
  auto o = owner_.at(index(x));
  if (o == kernels::kNoOwner) return std::nullopt;
  return o;
}

std::size_t deg(const HyperGraph& h, const NodeSet& set, std::uint32_t n) {
  std::size_t d = 0;
  for (auto m : h.adjacency().row(n)) d += set.at(m);
  return d;
}

std::size_t ndeg(const HyperGraph& h, const NodeSet& set, std::uint32_t n) {
  std::size_t d = 0;
  for (auto m : h.adjacency().row(n)) {
    if (set.at(m) && deg(h, set, m) > 1) ++d;
  }
  return d;
}

const std::vector<std::uint32_t>& Clustering::at(std::size_t i) const {
  if (i == 0 || i > slots_.size()) {
    throw Error(ErrorCode::invalid_argument, "unknown cluster index " + std::to_string(i));
  }
  return slots_[i - 1];
}

std::vector<std::vector<std::uint32_t>> Clustering::clusters() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& s : slots_) {
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

std::size_t Clustering::size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(), [](const auto& s) { return !s.empty(); }));
}

Clustering extend_cluster(Clustering c, std::size_t i, std::span<const std::uint32_t> extra) {
  if (i == 0 || i > c.slots_.size()) {
    throw Error(ErrorCode::invalid_argument, "unknown cluster index " + std::to_string(i));
  }
  auto& slot = c.slots_[i - 1];
  slot.insert(slot.end(), extra.begin(), extra.end());
  std::sort(slot.begin(), slot.end());
  slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
  return c;
}

Clustering cluster(const HyperGraph& h, const NodeSet& set) {
  if (set.size() != h.size()) throw Error(ErrorCode::invalid_argument, "node set does not match the level");
  const auto count = static_cast<std::size_t>(std::count(set.begin(), set.end(), 1));
  if (count == 0) throw Error(ErrorCode::invalid_argument, "cannot cluster an empty node set");
  if (!h.connected(set)) throw Error(ErrorCode::not_connected, "cannot cluster a disconnected hypergraph");

  const auto& adj = h.adjacency();
  Clustering result(count);
  NodeSet unclustered = set;
  std::size_t remaining = count;
  for (std::size_t slot = 1; remaining > 0; ++slot) {
    // N ∪ C(i) equals the unclustered set at seeding time for the whole cluster.
    const auto degree = kernels::degrees(adj, unclustered);
    const auto normalised = kernels::normalised_degrees(adj, unclustered, degree);

    std::uint32_t seed = kernels::kNoOwner;
    for (std::uint32_t i = 0; i < h.size(); ++i) {
      if (!unclustered[i]) continue;
      if (seed == kernels::kNoOwner || normalised[i] < normalised[seed] ||
          (normalised[i] == normalised[seed] && h.first_leaf(i) < h.first_leaf(seed))) {
        seed = i;
      }
    }

    std::vector<std::uint32_t> members{seed};
    unclustered[seed] = 0;
    for (std::size_t next = 0; next < members.size(); ++next) {
      const auto member = members[next];
      if (normalised[member] > 2 && degree[member] != 1) continue;
      for (auto m : adj.row(member)) {
        if (unclustered[m]) {
          unclustered[m] = 0;
          members.push_back(m);
        }
      }
    }
    remaining -= members.size();
    result = extend_cluster(std::move(result), slot, members);
  }
  return result;
}

Clustering cluster(const HyperGraph& h) { return cluster(h, h.full_set()); }

std::size_t ClusterHierarchy::total_stored() const noexcept {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

ClusterHierarchy ClusterHierarchy::from_levels(const Graph& graph, std::vector<std::vector<HyperNode>> levels) {
  check_hierarchy(graph, levels);
  return ClusterHierarchy(std::move(levels));
}

ClusterHierarchy hcluster(const Graph& graph) {
  if (graph.node_count() == 0) throw Error(ErrorCode::invalid_argument, "cannot cluster an empty graph");
  if (!graph.connected()) throw Error(ErrorCode::not_connected, "schema graph not connected");

  std::vector<std::vector<HyperNode>> levels(1);
  for (std::size_t i = 0; i < graph.node_count(); ++i) levels[0].push_back(HyperNode::leaf(node_id(i)));

  while (true) {
    HyperGraph h(graph, levels.back());
    if (h.edge_count() + 1 == h.size()) break;
    const auto clusters = cluster(h).clusters();
    if (clusters.size() >= h.size()) {
      throw Error(ErrorCode::semantic, "clustering made no progress on a level of " +
                                           std::to_string(h.size()) + " nodes");
    }
    std::vector<HyperNode> next;
    next.reserve(clusters.size());
    for (const auto& members : clusters) {
      HyperNode node;
      node.members = members;
      for (auto m : members) {
        const auto& leaves = h.node(m).leaves;
        node.leaves.insert(node.leaves.end(), leaves.begin(), leaves.end());
      }
      std::sort(node.leaves.begin(), node.leaves.end());
      next.push_back(std::move(node));
    }
    levels.push_back(std::move(next));
  }
  return ClusterHierarchy(std::move(levels));
}

void check_hierarchy(const Graph& graph, const std::vector<std::vector<HyperNode>>& levels) {
  if (levels.empty()) bad_hierarchy("no levels");
  const auto& base = levels[0];
  if (base.size() != graph.node_count()) bad_hierarchy("level 0 does not list every node");
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!(base[i] == HyperNode::leaf(node_id(i)))) bad_hierarchy("level 0 node " + std::to_string(i) + " is not a leaf");
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const auto where = "level " + std::to_string(l);
    if (l > 0) {
      std::vector<std::uint8_t> used(levels[l - 1].size(), 0);
      for (const auto& node : levels[l]) {
        if (node.members.empty()) bad_hierarchy(where + " has an empty cluster");
        std::vector<NodeId> leaves;
        for (auto m : node.members) {
          if (m >= used.size()) bad_hierarchy(where + " refers to a missing node");
          if (used[m]++) bad_hierarchy(where + " clusters overlap");
          const auto& below = levels[l - 1][m].leaves;
          leaves.insert(leaves.end(), below.begin(), below.end());
        }
        std::sort(leaves.begin(), leaves.end());
        if (leaves != node.leaves) bad_hierarchy(where + " leaf set disagrees with its members");
      }
      if (std::find(used.begin(), used.end(), 0) != used.end()) bad_hierarchy(where + " clusters do not cover the level below");
      HyperGraph below(graph, levels[l - 1]);
      for (const auto& node : levels[l]) {
        NodeSet inside(below.size(), 0);
        for (auto m : node.members) inside[m] = 1;
        for (auto m : node.members) {
          if (ndeg(below, inside, m) > 2) bad_hierarchy(where + " has a cluster with a branch");
        }
      }
      const auto before = levels[l - 1].size();
      if (before > 2 && levels[l].size() + 2 > before) bad_hierarchy(where + " shrank by fewer than two nodes");
    }
    HyperGraph h(graph, levels[l]);
    if (!h.connected()) bad_hierarchy(where + " is not connected");
    const bool acyclic = h.edge_count() + 1 == h.size();
    if (acyclic != (l + 1 == levels.size())) {
      bad_hierarchy(where + (acyclic ? " is acyclic but not the top level" : " is the top level but has a cycle"));
    }
  }
}

std::size_t storage_bound(std::size_t n) noexcept {
  const std::size_t k = n / 2;
  return n * k - k * k + k + 1;
}

}  // namespace ppq
