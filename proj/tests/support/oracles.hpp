#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// search, clustering or reduction code it is used to check: the oracles work
// from the raw edge list and from the textbook definitions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ppq/graph.hpp"

namespace ppq::testing {

inline std::string node_name(std::size_t i) {
  std::string s = std::to_string(i);
  return "n" + std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

/// Random connected multigraph on n nodes: a random spanning tree plus
/// `extra` further edges (parallel edges get distinct labels).
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(node_name(i));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Graph::EdgeSpec> edges;
  std::size_t label = 0;
  auto add = [&](std::size_t a, std::size_t b) {
    edges.push_back({names[a], names[b], EdgeLabel::of_role("e" + std::to_string(label++))});
  };
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    add(order[i], order[pick(rng)]);
  }
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    for (std::size_t k = 0; k < extra; ++k) {
      std::size_t a = any(rng), b = any(rng);
      while (b == a) b = any(rng);
      add(a, b);
    }
  }
  return Graph::from_edges(names, edges);
}

/// Graph from explicit index pairs on nodes n00..n(k-1), labels e0, e1, ...
inline Graph graph_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(node_name(i));
  std::vector<Graph::EdgeSpec> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    edges.push_back({names[pairs[k].first], names[pairs[k].second], EdgeLabel::of_role("e" + std::to_string(k))});
  }
  return Graph::from_edges(names, edges);
}

/// Every simple path from f to t as its alternating name/label token list,
/// found by exhaustive DFS over the raw edge list.
inline std::set<std::vector<std::string>> all_simple_paths(const Graph& g, NodeId f, NodeId t,
                                                           const std::vector<std::uint8_t>* allowed = nullptr) {
  std::set<std::vector<std::string>> out;
  const auto& edges = g.edges();
  std::vector<std::uint8_t> on_path(g.node_count(), 0);
  std::vector<std::string> tokens{g.name(f)};
  on_path[index(f)] = 1;
  std::function<void(NodeId)> dfs = [&](NodeId x) {
    if (x == t) {
      out.insert(tokens);
      return;
    }
    for (const auto& e : edges) {
      if (e.a != x && e.b != x) continue;
      NodeId y = e.a == x ? e.b : e.a;
      if (on_path[index(y)] || (allowed && !(*allowed)[index(y)])) continue;
      on_path[index(y)] = 1;
      tokens.emplace_back(e.label.text());
      tokens.push_back(g.name(y));
      dfs(y);
      tokens.pop_back();
      tokens.pop_back();
      on_path[index(y)] = 0;
    }
  };
  dfs(f);
  return out;
}

/// Exact rational for badness checks.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction make(std::int64_t n, std::int64_t d) {
    auto g = std::gcd(n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
  }
  Fraction operator+(Fraction o) const { return make(num * o.den + o.num * den, den * o.den); }
  Fraction operator*(Fraction o) const { return make(num * o.num, den * o.den); }
  Fraction operator-(Fraction o) const { return make(num * o.den - o.num * den, den * o.den); }
  bool operator==(const Fraction& o) const { return num * o.den == o.num * den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Sum over the path's nodes of c*(max - w) + (1-c)*max, straight from the
/// definition, with c given as an exact fraction.
inline Fraction badness_by_definition(const std::vector<std::uint64_t>& weights, Fraction c,
                                      const std::vector<NodeId>& nodes) {
  const auto max = static_cast<std::int64_t>(*std::max_element(weights.begin(), weights.end()));
  Fraction total{0, 1};
  for (NodeId x : nodes) {
    Fraction mw{max - static_cast<std::int64_t>(weights[index(x)]), 1};
    total = total + c * mw + (Fraction{1, 1} - c) * Fraction{max, 1};
  }
  return total;
}

/// Definitional ↭ on leaf sets: some raw edge joins the two sets.
inline bool reach_by_definition(const Graph& g, const std::vector<NodeId>& n, const std::vector<NodeId>& m) {
  auto in = [](const std::vector<NodeId>& s, NodeId x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  for (const auto& e : g.edges()) {
    if ((in(n, e.a) && in(m, e.b)) || (in(n, e.b) && in(m, e.a))) return true;
  }
  return false;
}

using LeafSets = std::vector<std::vector<NodeId>>;

inline std::size_t deg_by_definition(const Graph& g, const LeafSets& set, std::size_t n) {
  std::size_t d = 0;
  for (std::size_t m = 0; m < set.size(); ++m) {
    if (m != n && reach_by_definition(g, set[n], set[m])) ++d;
  }
  return d;
}

inline std::size_t ndeg_by_definition(const Graph& g, const LeafSets& set, std::size_t n) {
  std::size_t d = 0;
  for (std::size_t m = 0; m < set.size(); ++m) {
    if (m != n && deg_by_definition(g, set, m) > 1 && reach_by_definition(g, set[n], set[m])) ++d;
  }
  return d;
}

inline std::size_t sdeg_by_definition(const Graph& g, const LeafSets& set, std::size_t n) {
  std::set<NodeId> surroundings;
  for (std::size_t m = 0; m < set.size(); ++m) {
    if (m != n && reach_by_definition(g, set[n], set[m])) surroundings.insert(set[m].begin(), set[m].end());
  }
  return surroundings.size();
}

}  // namespace ppq::testing
