#include "ppq/pathfinder.hpp"

#include <algorithm>

#include "ppq/error.hpp"
#include "ppq/reduction.hpp"

namespace ppq {

SearchSpace::SearchSpace(const Graph& graph) : graph_(&graph) {}

SearchSpace::SearchSpace(const Graph& graph, const ReducedGraph& reduced)
    : graph_(&graph), allowed_(graph.node_count(), 0) {
  for (NodeId x : reduced.nodes) allowed_.at(index(x)) = 1;
}

std::size_t SearchSpace::node_count() const noexcept {
  if (allowed_.empty()) return graph_->node_count();
  return static_cast<std::size_t>(std::count(allowed_.begin(), allowed_.end(), 1));
}

SearchState SearchState::start(NodeId from, NodeId to, const SearchSpace& space,
                               const RelevanceConfig& cfg) {
  const auto& g = space.graph();
  if (index(from) >= g.node_count() || index(to) >= g.node_count()) {
    throw Error(ErrorCode::invalid_argument, "query point is not in the graph");
  }
  if (from == to) throw Error(ErrorCode::invalid_argument, "points must be distinct");
  if (!space.contains(from) || !space.contains(to)) {
    throw Error(ErrorCode::invalid_argument, "query point is outside the search space");
  }
  SearchState s(from, to);
  Path start(from);
  Badness b = badness(start, cfg);
  s.pool_.insert({b, std::move(start)});
  return s;
}

SearchState increment(SearchState state, const RelevanceConfig& cfg, const SearchSpace& space) {
  if (state.pool_.empty()) {
    auto rest = state.found_.begin();
    std::advance(rest, static_cast<std::ptrdiff_t>(state.released_.size()));
    state.released_.insert(state.released_.end(), rest, state.found_.end());
    state.exhausted_ = true;
    return state;
  }

  const Graph& g = space.graph();
  const Badness lowest = state.pool_.begin()->badness;
  std::vector<RankedPath> extensions;
  while (!state.pool_.empty() && state.pool_.begin()->badness == lowest) {
    auto node = state.pool_.extract(state.pool_.begin());
    const Path& p = node.value().path;
    for (EdgeIndex e : g.incident(p.end())) {
      NodeId next = g.edge(e).other(p.end());
      if (!space.contains(next) || p.contains(next)) continue;
      Path q = p.extended(g, e);
      const Badness b{lowest.scaled + cfg.contribution(next)};
      extensions.push_back({b, std::move(q)});
    }
  }
  for (auto& ext : extensions) {
    if (ext.path.end() == state.to_) {
      state.found_.insert(std::move(ext));
    } else {
      state.pool_.insert(std::move(ext));
    }
  }

  // S is ordered like R, and R is always a prefix of S: everything released
  // so far is at most the old cutoff, and new solutions lie strictly above it.
  auto next = state.found_.begin();
  std::advance(next, static_cast<std::ptrdiff_t>(state.released_.size()));
  for (; next != state.found_.end(); ++next) {
    if (!state.pool_.empty() && next->badness > state.pool_.begin()->badness) break;
    state.released_.push_back(*next);
  }
  return state;
}

SearchState list_more(SearchState state, const RelevanceConfig& cfg, const SearchSpace& space) {
  const std::size_t before = state.released_.size();
  while (!state.exhausted_) {
    state = increment(std::move(state), cfg, space);
    if (state.released_.size() != before) break;
  }
  if (state.pool_.empty() && state.released_.size() == state.found_.size()) state.exhausted_ = true;
  return state;
}

void validate_points(std::span<const NodeId> points) {
  if (points.size() < 2) throw Error(ErrorCode::invalid_argument, "need at least two points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i] == points[i - 1]) throw Error(ErrorCode::invalid_argument, "points must be distinct");
  }
}

std::vector<SearchState> multi_point(std::span<const NodeId> points, const RelevanceConfig& cfg,
                                     const SearchSpace& space) {
  validate_points(points);
  std::vector<SearchState> out;
  out.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    out.push_back(list_more(SearchState::start(points[i], points[i + 1], space, cfg), cfg, space));
  }
  return out;
}

}  // namespace ppq
