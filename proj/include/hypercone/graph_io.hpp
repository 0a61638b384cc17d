#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hypercone/hypergraph.hpp"

namespace hypercone {

/// Record of boundary vertices folded into one vertex per party at load time.
struct BoundaryMerge {
  std::string party;
  std::string kept;
  std::vector<std::string> merged;
};

struct LoadedGraph {
  Hypergraph graph;
  std::vector<BoundaryMerge> merges;
  /// Edges that became single-vertex after merging; they can never be cut.
  std::size_t dropped_edges = 0;
};

/// {"n":5, "vertices":[...], "boundary":{"A":"A",...,"O":"O"}, "edges":[{"v":[...],"w":"1"}]}.
/// A boundary entry may also be a list of vertex names; those vertices are merged.
/// Weights are JSON integers or decimal / "p/q" strings.
LoadedGraph graph_from_json(const nlohmann::json& doc);
LoadedGraph load_graph(const std::string& path);

nlohmann::json graph_to_json(const Hypergraph& graph);

nlohmann::json merges_to_json(const std::vector<BoundaryMerge>& merges);

/// Rational from a JSON integer or string.
Rational rational_from_json(const nlohmann::json& value);

nlohmann::json read_json_file(const std::string& path);

}  // namespace hypercone
