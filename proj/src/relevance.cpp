#include "ppq/relevance.hpp"

#include <algorithm>
#include <cmath>

#include "ppq/error.hpp"
#include "ppq/schema.hpp"

namespace ppq {

double Badness::value() const noexcept {
  return static_cast<double>(scaled) / static_cast<double>(RelevanceConfig::kScale);
}

RelevanceConfig::RelevanceConfig(std::vector<std::uint64_t> weights, double c_weight)
    : weights_(std::move(weights)) {
  if (!(c_weight >= 0.0 && c_weight <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "c_weight must lie in [0, 1]");
  }
  max_cweight_ = weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end());
  if (max_cweight_ == 0) {
    throw Error(ErrorCode::invalid_argument, "at least one conceptual weight must be positive");
  }
  c_weight_ = std::llround(c_weight * kScale);
  // c = 1 is clamped to 1 - 1/kScale.
  if (c_weight_ == kScale) c_weight_ = kScale - 1;

  const auto max = static_cast<std::int64_t>(max_cweight_);
  contribution_.reserve(weights_.size());
  for (auto w : weights_) {
    contribution_.push_back(c_weight_ * (max - static_cast<std::int64_t>(w)) + (kScale - c_weight_) * max);
  }
}

RelevanceConfig RelevanceConfig::for_schema(const Schema& schema, const Graph& graph, double c_weight) {
  std::vector<std::uint64_t> weights;
  weights.reserve(graph.node_count());
  for (const auto& name : graph.names()) weights.push_back(schema.cweight(name));
  return RelevanceConfig(std::move(weights), c_weight);
}

Badness badness(const Path& p, const RelevanceConfig& cfg) {
  Badness b;
  for (NodeId x : p.nodes()) b.scaled += cfg.contribution(x);
  return b;
}

std::vector<Path> best(std::span<const Path> pool, const RelevanceConfig& cfg) {
  if (pool.empty()) throw Error(ErrorCode::empty_pool, "empty pool");
  std::vector<Badness> scores;
  scores.reserve(pool.size());
  for (const auto& p : pool) scores.push_back(badness(p, cfg));
  const Badness lowest = *std::min_element(scores.begin(), scores.end());
  std::vector<Path> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (scores[i] == lowest) out.push_back(pool[i]);
  }
  return out;
}

}  // namespace ppq
