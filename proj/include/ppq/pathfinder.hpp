#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "ppq/graph.hpp"
#include "ppq/relevance.hpp"

namespace ppq {

struct ReducedGraph;

/// The part of a graph a search may walk: either the whole graph or the node
/// set surviving a reduction. Holds a reference to the graph.
class SearchSpace {
 public:
  explicit SearchSpace(const Graph& graph);
  SearchSpace(const Graph& graph, const ReducedGraph& reduced);

  const Graph& graph() const noexcept { return *graph_; }
  bool contains(NodeId x) const { return allowed_.empty() || allowed_.at(index(x)) != 0; }
  std::size_t node_count() const noexcept;

 private:
  const Graph* graph_;
  std::vector<std::uint8_t> allowed_;  // empty = every node
};

struct RankedPath {
  Badness badness;
  Path path;

  auto operator<=>(const RankedPath&) const = default;
};

/// Open pool P, found solutions S and released solutions R of one
/// point-to-point search. Sets are ordered by (badness, path), which makes
/// every run reproducible.
class SearchState {
 public:
  /// P = {[from]}, S = R = {}. Throws Error(invalid_argument) if
  /// from == to or either node is outside the space.
  static SearchState start(NodeId from, NodeId to, const SearchSpace& space,
                           const RelevanceConfig& cfg);

  NodeId from() const noexcept { return from_; }
  NodeId to() const noexcept { return to_; }
  bool exhausted() const noexcept { return exhausted_; }

  const std::set<RankedPath>& pool() const noexcept { return pool_; }
  const std::set<RankedPath>& found() const noexcept { return found_; }
  /// R in release order (non-decreasing badness).
  const std::vector<RankedPath>& released() const noexcept { return released_; }

 private:
  friend SearchState increment(SearchState, const RelevanceConfig&, const SearchSpace&);
  friend SearchState list_more(SearchState, const RelevanceConfig&, const SearchSpace&);

  SearchState(NodeId from, NodeId to) : from_(from), to_(to) {}

  NodeId from_;
  NodeId to_;
  std::set<RankedPath> pool_;
  std::set<RankedPath> found_;
  std::vector<RankedPath> released_;
  bool exhausted_ = false;
};

/// One step of the search: extend every best path of P by one edge (never
/// revisiting a node), move paths reaching `to` into S, and release every
/// solution whose badness does not exceed the new minimum of P (+inf when P
/// is empty). On an empty pool, releases all of S and marks the state
/// exhausted.
SearchState increment(SearchState state, const RelevanceConfig& cfg, const SearchSpace& space);

/// Applies increment until R grows or the search is exhausted. The first
/// call fills a fresh state; every further call is one MORE press. When the
/// pool runs dry with nothing left to release the state is marked exhausted
/// right away, so callers can tell no further press will help.
SearchState list_more(SearchState state, const RelevanceConfig& cfg, const SearchSpace& space);

/// Checks a point sequence: at least two points, no two adjacent equal.
/// Throws Error(invalid_argument).
void validate_points(std::span<const NodeId> points);

/// One started-and-listed state per consecutive pair of points.
std::vector<SearchState> multi_point(std::span<const NodeId> points, const RelevanceConfig& cfg,
                                     const SearchSpace& space);

}  // namespace ppq
