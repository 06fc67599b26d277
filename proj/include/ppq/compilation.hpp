#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ppq/clustering.hpp"
#include "ppq/graph.hpp"

namespace ppq {

inline constexpr std::string_view kCompilationFormat = "ppq-compilation/1";

/// JSON document:
///   { "format": "ppq-compilation/1", "schema_hash": "<sha256>",
///     "levels": [ ["A", "B", ...],            // level 0: node names
///                 [["A", "f"], ["B"], ...],   // level 1: clusters of names
///                 [[["A", "f"], ["B"]], ...]  // level 2: clusters of clusters
///                 ... ] }
std::string write_compilation(const ClusterHierarchy& hierarchy, const Graph& graph,
                              const std::string& schema_hash);

/// Parses and validates a compilation document against `graph`. Throws
/// Error(compilation) on a hash mismatch, unknown names, or a hierarchy
/// that fails check_hierarchy.
ClusterHierarchy read_compilation(std::string_view text, const Graph& graph,
                                  const std::string& expected_hash);

ClusterHierarchy load_compilation(const std::filesystem::path& path, const Graph& graph,
                                  const std::string& expected_hash);

}  // namespace ppq
