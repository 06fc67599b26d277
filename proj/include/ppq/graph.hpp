#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppq {

class Schema;

/// Dense node handle. Ids are assigned in byte-wise name order, so comparing
/// ids compares type names.
enum class NodeId : std::uint32_t {};

constexpr std::size_t index(NodeId id) noexcept { return static_cast<std::size_t>(id); }
constexpr NodeId node_id(std::size_t i) noexcept { return static_cast<NodeId>(i); }

using EdgeIndex = std::uint32_t;

enum class LabelKind : std::uint8_t { role, spec, poly };

/// A role name, or one of the reserved SPEC / POLY markers.
struct EdgeLabel {
  LabelKind kind = LabelKind::role;
  std::string role;

  static EdgeLabel of_role(std::string name) { return {LabelKind::role, std::move(name)}; }
  static EdgeLabel spec() { return {LabelKind::spec, {}}; }
  static EdgeLabel poly() { return {LabelKind::poly, {}}; }
  /// Parses "SPEC", "POLY" or a role name.
  static EdgeLabel parse(std::string_view text);

  std::string_view text() const noexcept;
  bool structural() const noexcept { return kind != LabelKind::role; }

  bool operator==(const EdgeLabel& other) const noexcept {
    return kind == other.kind && role == other.role;
  }
  std::strong_ordering operator<=>(const EdgeLabel& other) const noexcept {
    return text() <=> other.text();
  }
};

inline constexpr std::string_view kSpecLabel = "SPEC";
inline constexpr std::string_view kPolyLabel = "POLY";

struct Edge {
  NodeId a;  // a < b
  NodeId b;
  EdgeLabel label;

  NodeId other(NodeId x) const noexcept { return x == a ? b : a; }
  bool touches(NodeId x) const noexcept { return x == a || x == b; }
};

/// Undirected labelled multigraph. Parallel edges are allowed as long as
/// their labels differ; self-loops are not.
///
/// Edges are stored sorted by (label text, a, b). For edges sharing an
/// endpoint this coincides with ordering by (label text, other endpoint),
/// which lets paths compare lexicographically by edge index.
class Graph {
 public:
  struct EdgeSpec {
    std::string a;
    std::string b;
    EdgeLabel label;
  };

  /// Builds a graph over `names` (must be unique). Duplicate edges with the
  /// same endpoints and label collapse into one. Throws Error(semantic) for
  /// self-loops or unknown endpoints.
  static Graph from_edges(std::vector<std::string> names, const std::vector<EdgeSpec>& edges);

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& name(NodeId id) const { return names_.at(index(id)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<NodeId> find(std::string_view name) const;
  /// Throws Error(invalid_argument) for unknown names.
  NodeId id(std::string_view name) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  /// Edges incident to `x`, ascending.
  std::span<const EdgeIndex> incident(NodeId x) const;
  std::optional<EdgeIndex> find_edge(NodeId x, NodeId y, const EdgeLabel& label) const;

  bool connected() const;

  /// Debug listing, one node per line: `name: label->neighbour ...`.
  std::string adjacency_listing() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> incident_offsets_;
  std::vector<EdgeIndex> incident_;
};

/// Builds the labelled graph of a schema: one node per type; one edge per
/// role between its player and its relationship type; one SPEC edge per
/// subtype pair and one POLY edge per poly pair. Throws Error(semantic) if
/// any edge would be a self-loop.
Graph derive_graph(const Schema& schema);

/// One step appended to a path: follow the edge labelled `label` to `node`.
struct Step {
  EdgeLabel label;
  NodeId node;
};

/// An acyclic path [x0, l1, x1, ..., ln, xn]. Validity is checked on every
/// construction route that takes untrusted input.
class Path {
 public:
  explicit Path(NodeId start) : nodes_{start} {}

  NodeId begin() const noexcept { return nodes_.front(); }
  NodeId end() const noexcept { return nodes_.back(); }
  std::size_t length() const noexcept { return edges_.size(); }
  bool contains(NodeId x) const noexcept;

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::span<const EdgeIndex> edges() const noexcept { return edges_; }

  /// Appends edge `e` of `graph`. Throws Error(invalid_path) if `e` does not
  /// touch the current end or its far endpoint is already on the path.
  Path extended(const Graph& graph, EdgeIndex e) const;

  /// Builds from alternating tokens "x0", "l1", "x1", ... (labels as text).
  static Path from_tokens(const Graph& graph, std::span<const std::string> tokens);
  static Path from_tokens(const Graph& graph, std::initializer_list<std::string_view> tokens);

  /// Alternating node / label names.
  std::vector<std::string> tokens(const Graph& graph) const;

  bool operator==(const Path&) const = default;
  /// Lexicographic over (x0, e1, e2, ...); see Graph for why this matches the
  /// order of the alternating name/label sequence.
  std::strong_ordering operator<=>(const Path& other) const noexcept;

 private:
  std::vector<NodeId> nodes_;
  std::vector<EdgeIndex> edges_;
};

/// Path concatenation with a sequence of steps; each step must follow an
/// existing edge from the current end to a node not yet on the path.
Path concat(const Graph& graph, const Path& p, std::span<const Step> tail);

}  // namespace ppq
