#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ppq/graph.hpp"

namespace ppq {

class Schema;

/// Exact badness, stored as a multiple of 1/RelevanceConfig::kScale.
struct Badness {
  std::int64_t scaled = 0;

  double value() const noexcept;
  auto operator<=>(const Badness&) const = default;
};

/// c_weight and per-node conceptual weights, pre-folded into an integer
/// contribution per node.
class RelevanceConfig {
 public:
  /// c_weight is held as a fraction with this fixed denominator.
  static constexpr std::int64_t kScale = 1024;
  static constexpr double kDefaultCWeight = 0.5;

  /// `weights[i]` is the conceptual weight of node i. c_weight must lie in
  /// [0, 1]; it is rounded to the nearest multiple of 1/kScale, and 1 becomes
  /// 1 - 1/kScale.
  /// Throws Error(invalid_argument) when c_weight is out of range or every
  /// weight is zero.
  RelevanceConfig(std::vector<std::uint64_t> weights, double c_weight);

  static RelevanceConfig for_schema(const Schema& schema, const Graph& graph,
                                    double c_weight = kDefaultCWeight);

  /// Effective c_weight numerator over kScale.
  std::int64_t c_weight_scaled() const noexcept { return c_weight_; }
  double c_weight() const noexcept { return static_cast<double>(c_weight_) / kScale; }
  std::uint64_t max_cweight() const noexcept { return max_cweight_; }
  std::uint64_t cweight(NodeId x) const { return weights_.at(index(x)); }

  /// Scaled penalty for visiting node x:
  /// c * (max - w(x)) + (1 - c) * max, times kScale.
  std::int64_t contribution(NodeId x) const { return contribution_.at(index(x)); }

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t max_cweight_ = 0;
  std::int64_t c_weight_ = 0;
  std::vector<std::int64_t> contribution_;
};

Badness badness(const Path& p, const RelevanceConfig& cfg);

/// All paths of minimal badness, in input order. Throws Error(empty_pool).
std::vector<Path> best(std::span<const Path> pool, const RelevanceConfig& cfg);

}  // namespace ppq
