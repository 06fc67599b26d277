#include "ppq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "ppq/error.hpp"
#include "ppq/schema.hpp"

namespace ppq {

EdgeLabel EdgeLabel::parse(std::string_view text) {
  if (text == kSpecLabel) return spec();
  if (text == kPolyLabel) return poly();
  return of_role(std::string(text));
}

std::string_view EdgeLabel::text() const noexcept {
  switch (kind) {
    case LabelKind::spec: return kSpecLabel;
    case LabelKind::poly: return kPolyLabel;
    case LabelKind::role: break;
  }
  return role;
}

Graph Graph::from_edges(std::vector<std::string> names, const std::vector<EdgeSpec>& edges) {
  Graph g;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw Error(ErrorCode::semantic, "duplicate node name");
  }
  g.names_ = std::move(names);

  g.edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    auto a = g.find(spec.a);
    auto b = g.find(spec.b);
    if (!a || !b) {
      throw Error(ErrorCode::semantic, "edge " + std::string(spec.label.text()) + " has unknown endpoint");
    }
    if (*a == *b) {
      throw Error(ErrorCode::semantic, "degenerate edge: label " + std::string(spec.label.text()) +
                                           " would connect '" + spec.a + "' to itself");
    }
    g.edges_.push_back({std::min(*a, *b), std::max(*a, *b), spec.label});
  }
  auto key = [](const Edge& e) { return std::tuple(e.label.text(), e.a, e.b); };
  std::sort(g.edges_.begin(), g.edges_.end(),
            [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end(),
                             [&](const Edge& x, const Edge& y) { return key(x) == key(y); }),
                 g.edges_.end());

  const std::size_t n = g.names_.size();
  g.incident_offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.incident_offsets_[index(e.a) + 1];
    ++g.incident_offsets_[index(e.b) + 1];
  }
  std::partial_sum(g.incident_offsets_.begin(), g.incident_offsets_.end(), g.incident_offsets_.begin());
  g.incident_.resize(g.incident_offsets_.back());
  std::vector<std::uint32_t> cursor(g.incident_offsets_.begin(), g.incident_offsets_.end() - 1);
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    g.incident_[cursor[index(g.edges_[e].a)]++] = e;
    g.incident_[cursor[index(g.edges_[e].b)]++] = e;
  }
  return g;
}

std::optional<NodeId> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return node_id(static_cast<std::size_t>(it - names_.begin()));
}

NodeId Graph::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw Error(ErrorCode::invalid_argument, "unknown type '" + std::string(name) + "'");
}

std::span<const EdgeIndex> Graph::incident(NodeId x) const {
  const auto i = index(x);
  return std::span<const EdgeIndex>(incident_).subspan(incident_offsets_.at(i),
                                                       incident_offsets_.at(i + 1) - incident_offsets_[i]);
}

std::optional<EdgeIndex> Graph::find_edge(NodeId x, NodeId y, const EdgeLabel& label) const {
  for (EdgeIndex e : incident(x)) {
    if (edges_[e].other(x) == y && edges_[e].label == label) return e;
  }
  return std::nullopt;
}

bool Graph::connected() const {
  if (names_.empty()) return true;
  std::vector<bool> seen(names_.size(), false);
  std::vector<NodeId> stack{node_id(0)};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (EdgeIndex e : incident(x)) {
      NodeId y = edges_[e].other(x);
      if (!seen[index(y)]) {
        seen[index(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == names_.size();
}

std::string Graph::adjacency_listing() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    out << names_[i] << ':';
    for (EdgeIndex e : incident(node_id(i))) {
      out << ' ' << edges_[e].label.text() << "->" << names_[index(edges_[e].other(node_id(i)))];
    }
    out << '\n';
  }
  return out.str();
}

Graph derive_graph(const Schema& schema) {
  std::vector<Graph::EdgeSpec> edges;
  for (const auto& rel : schema.relationship_types()) {
    for (const auto& role : rel.roles) {
      edges.push_back({role.player, rel.name, EdgeLabel::of_role(role.name)});
    }
  }
  for (const auto& [x, y] : schema.subtype()) edges.push_back({x, y, EdgeLabel::spec()});
  for (const auto& [x, y] : schema.poly()) edges.push_back({x, y, EdgeLabel::poly()});
  return Graph::from_edges(schema.types(), edges);
}

bool Path::contains(NodeId x) const noexcept {
  return std::find(nodes_.begin(), nodes_.end(), x) != nodes_.end();
}

Path Path::extended(const Graph& graph, EdgeIndex e) const {
  if (e >= graph.edge_count()) throw Error(ErrorCode::invalid_path, "no such edge");
  const Edge& edge = graph.edge(e);
  if (!edge.touches(end())) {
    throw Error(ErrorCode::invalid_path, "edge " + std::string(edge.label.text()) + " does not touch '" +
                                             graph.name(end()) + "'");
  }
  NodeId next = edge.other(end());
  if (contains(next)) {
    throw Error(ErrorCode::invalid_path, "path would revisit '" + graph.name(next) + "'");
  }
  Path out = *this;
  out.edges_.push_back(e);
  out.nodes_.push_back(next);
  return out;
}

Path Path::from_tokens(const Graph& graph, std::span<const std::string> tokens) {
  if (tokens.size() % 2 == 0) {
    throw Error(ErrorCode::invalid_path, "path tokens must alternate node, label, ..., node");
  }
  Path p(graph.id(tokens[0]));
  std::vector<Step> steps;
  for (std::size_t i = 1; i < tokens.size(); i += 2) {
    steps.push_back({EdgeLabel::parse(tokens[i]), graph.id(tokens[i + 1])});
  }
  return concat(graph, p, steps);
}

Path Path::from_tokens(const Graph& graph, std::initializer_list<std::string_view> tokens) {
  std::vector<std::string> owned(tokens.begin(), tokens.end());
  return from_tokens(graph, std::span<const std::string>(owned));
}

std::vector<std::string> Path::tokens(const Graph& graph) const {
  std::vector<std::string> out{graph.name(nodes_[0])};
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out.emplace_back(graph.edge(edges_[i]).label.text());
    out.push_back(graph.name(nodes_[i + 1]));
  }
  return out;
}

std::strong_ordering Path::operator<=>(const Path& other) const noexcept {
  if (auto c = nodes_.front() <=> other.nodes_.front(); c != 0) return c;
  return std::lexicographical_compare_three_way(edges_.begin(), edges_.end(), other.edges_.begin(),
                                                other.edges_.end());
}

Path concat(const Graph& graph, const Path& p, std::span<const Step> tail) {
  Path out = p;
  for (const auto& step : tail) {
    auto e = graph.find_edge(out.end(), step.node, step.label);
    if (!e) {
      throw Error(ErrorCode::invalid_path, "no edge " + std::string(step.label.text()) + " between '" +
                                               graph.name(out.end()) + "' and '" + graph.name(step.node) + "'");
    }
    out = out.extended(graph, *e);
  }
  return out;
}

}  // namespace ppq
