#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppq/clustering.hpp"
#include "ppq/graph.hpp"
#include "ppq/pathfinder.hpp"
#include "ppq/reduction.hpp"
#include "ppq/relevance.hpp"
#include "ppq/schema.hpp"

namespace ppq {

/// A schema with its derived graph and, once compiled, its cluster
/// hierarchy. Immutable after construction; share it between queries.
class Engine {
 public:
  /// Derives the graph. Throws Error(not_connected) for a disconnected
  /// schema and Error(semantic) for degenerate edges.
  explicit Engine(Schema schema);
  Engine(Schema schema, ClusterHierarchy hierarchy);

  /// Derives the graph and runs hcluster on it.
  static Engine compile(Schema schema);

  const Schema& schema() const noexcept { return schema_; }
  const Graph& graph() const noexcept { return graph_; }
  const std::string& schema_hash() const noexcept { return hash_; }
  const std::optional<ClusterHierarchy>& hierarchy() const noexcept { return hierarchy_; }

  /// Search space for one pair: reduced through the hierarchy when
  /// compiled, by plain leaf pruning otherwise.
  ReducedGraph reduced(NodeId from, NodeId to) const;
  RelevanceConfig relevance(double c_weight) const;
  /// Throws Error(invalid_argument) naming the first unknown type.
  std::vector<NodeId> resolve(std::span<const std::string> names) const;

 private:
  Schema schema_;
  Graph graph_;
  std::string hash_;
  std::optional<ClusterHierarchy> hierarchy_;
};

/// Search for one consecutive pair of points over its reduced space.
class PairSearch {
 public:
  PairSearch(const Engine& engine, NodeId from, NodeId to, const RelevanceConfig& cfg);

  /// One MORE press: a single list_more call. Returns the newly released
  /// paths (empty once exhausted).
  std::vector<RankedPath> more(const RelevanceConfig& cfg);

  const SearchState& state() const noexcept { return state_; }
  const ReducedGraph& reduced() const noexcept { return reduced_; }

 private:
  ReducedGraph reduced_;
  SearchSpace space_;
  SearchState state_;
};

/// A multi-point query: one PairSearch per consecutive pair, each listed
/// once on construction. Keeps the engine alive.
class Query {
 public:
  /// Throws Error(invalid_argument) for fewer than two points, repeated
  /// adjacent points, unknown names or a c_weight outside [0, 1].
  Query(std::shared_ptr<const Engine> engine, std::span<const std::string> points, double c_weight);

  const Engine& engine() const noexcept { return *engine_; }
  const std::vector<NodeId>& points() const noexcept { return points_; }
  const RelevanceConfig& relevance() const noexcept { return cfg_; }
  std::size_t pair_count() const noexcept { return pairs_.size(); }
  const PairSearch& pair(std::size_t i) const { return pairs_.at(i); }
  /// Throws Error(invalid_argument) for an unknown pair index.
  std::vector<RankedPath> more(std::size_t pair_index);

 private:
  std::shared_ptr<const Engine> engine_;
  std::vector<NodeId> points_;
  RelevanceConfig cfg_;
  std::vector<PairSearch> pairs_;
};

/// Shortest decimal that round-trips, e.g. "2.5", "6".
std::string format_badness(Badness b);

/// {expression, badness, nodes, labels}
nlohmann::json path_json(const Engine& engine, const RankedPath& path);

}  // namespace ppq
