#include "ppq/compilation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "ppq/error.hpp"

namespace ppq {
namespace {

using nlohmann::json;

[[noreturn]] void corrupt(const std::string& message) {
  throw Error(ErrorCode::compilation, "compilation file: " + message);
}

json render(const ClusterHierarchy& h, const Graph& g, std::size_t level, std::uint32_t i) {
  if (level == 0) return g.name(node_id(i));
  json out = json::array();
  for (auto m : h.level(level)[i].members) out.push_back(render(h, g, level - 1, m));
  return out;
}

// Resolves a rendered node of `level` to its leaf set, checking that every
// nested member is an existing node of the level below.
std::vector<NodeId> leaves_of(const json& node, std::size_t level, const Graph& graph,
                              const std::vector<std::map<std::vector<NodeId>, std::uint32_t>>& index_by_leaves,
                              std::vector<std::uint32_t>* members) {
  if (level == 0) {
    if (!node.is_string()) corrupt("level 0 entries must be node names");
    auto id = graph.find(node.get<std::string>());
    if (!id) corrupt("unknown node '" + node.get<std::string>() + "'");
    if (members) members->push_back(static_cast<std::uint32_t>(index(*id)));
    return {*id};
  }
  if (!node.is_array() || node.empty()) corrupt("level " + std::to_string(level) + " entries must be non-empty arrays");
  std::vector<NodeId> leaves;
  for (const auto& child : node) {
    auto below = leaves_of(child, level - 1, graph, index_by_leaves, nullptr);
    std::sort(below.begin(), below.end());
    if (level - 1 > 0) {
      auto it = index_by_leaves[level - 1].find(below);
      if (it == index_by_leaves[level - 1].end()) {
        corrupt("level " + std::to_string(level) + " refers to a cluster missing from level " + std::to_string(level - 1));
      }
      if (members) members->push_back(it->second);
    } else if (members) {
      members->push_back(static_cast<std::uint32_t>(index(below.front())));
    }
    leaves.insert(leaves.end(), below.begin(), below.end());
  }
  return leaves;
}

}  // namespace

std::string write_compilation(const ClusterHierarchy& hierarchy, const Graph& graph,
                              const std::string& schema_hash) {
  json levels = json::array();
  for (std::size_t l = 0; l < hierarchy.level_count(); ++l) {
    json level = json::array();
    for (std::uint32_t i = 0; i < hierarchy.level(l).size(); ++i) level.push_back(render(hierarchy, graph, l, i));
    levels.push_back(std::move(level));
  }
  json doc = {{"format", kCompilationFormat}, {"schema_hash", schema_hash}, {"levels", levels}};
  return doc.dump(1) + "\n";
}

ClusterHierarchy read_compilation(std::string_view text, const Graph& graph, const std::string& expected_hash) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    corrupt(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) corrupt("document must be an object");
  if (doc.value("format", "") != kCompilationFormat) corrupt("unsupported format");
  if (!doc.contains("schema_hash") || !doc["schema_hash"].is_string()) corrupt("missing schema_hash");
  if (doc["schema_hash"].get<std::string>() != expected_hash) {
    corrupt("schema hash mismatch (schema changed since compilation)");
  }
  const auto& rendered = doc["levels"];
  if (!rendered.is_array() || rendered.empty()) corrupt("levels must be a non-empty array");

  std::vector<std::vector<HyperNode>> levels(rendered.size());
  std::vector<std::map<std::vector<NodeId>, std::uint32_t>> index_by_leaves(rendered.size());
  for (std::size_t l = 0; l < rendered.size(); ++l) {
    if (!rendered[l].is_array()) corrupt("each level must be an array");
    for (const auto& node : rendered[l]) {
      HyperNode h;
      h.leaves = leaves_of(node, l, graph, index_by_leaves, l == 0 ? nullptr : &h.members);
      std::sort(h.leaves.begin(), h.leaves.end());
      std::sort(h.members.begin(), h.members.end());
      if (!index_by_leaves[l].emplace(h.leaves, static_cast<std::uint32_t>(levels[l].size())).second) {
        corrupt("level " + std::to_string(l) + " repeats a node");
      }
      levels[l].push_back(std::move(h));
    }
  }
  return ClusterHierarchy::from_levels(graph, std::move(levels));
}

ClusterHierarchy load_compilation(const std::filesystem::path& path, const Graph& graph,
                                  const std::string& expected_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read compilation file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_compilation(buffer.str(), graph, expected_hash);
}

}  // namespace ppq
