#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercone/catalog.hpp"
#include "hypercone/contraction.hpp"
#include "hypercone/graph_io.hpp"
#include "hypercone/library.hpp"
#include "run.hpp"

namespace hypercone::cli {

struct NamedInequality {
  std::string name;
  Inequality ineq;
  const LibraryEntry* builtin = nullptr;
};

/// Built-in name, inequality JSON file, or an expression. For expressions
/// without an explicit n the largest party letter decides.
NamedInequality resolve_inequality(Run& run, const std::string& arg, std::optional<int> n);

struct NamedGraph {
  std::string name;
  Hypergraph graph;
  std::vector<BoundaryMerge> merges;
  std::size_t dropped_edges = 0;
};

/// Graph JSON file or a catalog ray name.
NamedGraph resolve_graph(Run& run, const std::string& arg);

/// {"L":5, "Rp":5, "f10":[...]}.
ContractionMap load_map(Run& run, const std::string& path);
nlohmann::json map_to_json(const ContractionMap& map);

/// Comma-separated built-in names, "all", or an inequality file; each entry
/// is lifted to every instance on n parties.
std::vector<std::pair<std::string, std::vector<NamedQ>>> resolve_inequality_set(Run& run, const std::string& arg,
                                                                                 int n);

}  // namespace hypercone::cli
