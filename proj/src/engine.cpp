#include "ppq/engine.hpp"

#include <charconv>

#include "ppq/error.hpp"
#include "ppq/verbalizer.hpp"

namespace ppq {
namespace {

Graph connected_graph(const Schema& schema) {
  Graph g = derive_graph(schema);
  if (!g.connected()) throw Error(ErrorCode::not_connected, "schema graph not connected");
  return g;
}

}  // namespace

Engine::Engine(Schema schema)
    : schema_(std::move(schema)), graph_(connected_graph(schema_)), hash_(ppq::schema_hash(schema_)) {}

Engine::Engine(Schema schema, ClusterHierarchy hierarchy) : Engine(std::move(schema)) {
  check_hierarchy(graph_, hierarchy.levels());
  hierarchy_ = std::move(hierarchy);
}

Engine Engine::compile(Schema schema) {
  Engine e(std::move(schema));
  e.hierarchy_ = hcluster(e.graph_);
  return e;
}

ReducedGraph Engine::reduced(NodeId from, NodeId to) const {
  if (hierarchy_) return reduce(*hierarchy_, from, to, graph_);
  return reduce(graph_, from, to);
}

RelevanceConfig Engine::relevance(double c_weight) const {
  return RelevanceConfig::for_schema(schema_, graph_, c_weight);
}

std::vector<NodeId> Engine::resolve(std::span<const std::string> names) const {
  std::vector<NodeId> out;
  out.reserve(names.size());
  for (const auto& name : names) out.push_back(graph_.id(name));
  return out;
}

PairSearch::PairSearch(const Engine& engine, NodeId from, NodeId to, const RelevanceConfig& cfg)
    : reduced_(engine.reduced(from, to)),
      space_(engine.graph(), reduced_),
      state_(list_more(SearchState::start(from, to, space_, cfg), cfg, space_)) {}

std::vector<RankedPath> PairSearch::more(const RelevanceConfig& cfg) {
  const auto before = state_.released().size();
  state_ = list_more(std::move(state_), cfg, space_);
  const auto& released = state_.released();
  return {released.begin() + static_cast<std::ptrdiff_t>(before), released.end()};
}

Query::Query(std::shared_ptr<const Engine> engine, std::span<const std::string> points, double c_weight)
    : engine_(std::move(engine)), points_(engine_->resolve(points)), cfg_(engine_->relevance(c_weight)) {
  validate_points(points_);
  pairs_.reserve(points_.size() - 1);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) pairs_.emplace_back(*engine_, points_[i], points_[i + 1], cfg_);
}

std::vector<RankedPath> Query::more(std::size_t pair_index) {
  if (pair_index >= pairs_.size()) {
    throw Error(ErrorCode::invalid_argument, "pair_index " + std::to_string(pair_index) + " out of range");
  }
  return pairs_[pair_index].more(cfg_);
}

std::string format_badness(Badness b) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, b.value());
  return std::string(buffer, end);
}

nlohmann::json path_json(const Engine& engine, const RankedPath& path) {
  const auto& g = engine.graph();
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId x : path.path.nodes()) nodes.push_back(g.name(x));
  nlohmann::json labels = nlohmann::json::array();
  for (EdgeIndex e : path.path.edges()) labels.push_back(std::string(g.edge(e).label.text()));
  return {{"expression", path_expr(path.path, g, engine.schema()).render()},
          {"badness", path.badness.value()},
          {"nodes", std::move(nodes)},
          {"labels", std::move(labels)}};
}

}  // namespace ppq
