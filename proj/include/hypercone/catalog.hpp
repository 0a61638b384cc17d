#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercone/hypergraph.hpp"
#include "hypercone/inequality.hpp"

namespace hypercone {

struct RayEntry {
  std::string name;
  int n = 0;
  Hypergraph graph;
  std::optional<EntropyVector> expected;
  std::string provenance;
};

/// Bell_AO, Bell_AB, GHZ3..GHZ6, Star3..Star6, R8, R12, CLR5. Expected vectors
/// are the min-cut vectors of the shipped graphs.
const std::vector<RayEntry>& builtin_rays();
const RayEntry* find_ray(std::string_view name);

/// Positive c with entropy_vector(graph) = c * target, if any.
std::optional<Rational> is_realization(const Hypergraph& graph, const EntropyVector& target);

struct NamedQ {
  std::string name;
  QVector q;
};

struct FacetStatus {
  std::string name;
  Rational value;  // Q·S
  bool saturated = false;
  bool violated = false;
};

std::vector<FacetStatus> saturated_facets(const EntropyVector& s, const std::vector<NamedQ>& library);

/// Every instance of `q` (on k parties) on n parties: each of the n + 1 target
/// parties is sent to one of the k + 1 source parties, surjectively, and
/// labels that end up containing the purifier are complemented. Duplicates
/// are dropped; names look like "SSA[A,B,CD|O]".
std::vector<NamedQ> instances(const std::string& name, const QVector& q, int n);

struct LoadedRays {
  std::vector<RayEntry> rays;
  std::map<int, int> bulk_census;  // bulk vertex count -> number of rays
};

/// {"rays": [{"name": ..., "graph": {...}, "expected": [...]?}, ...]}.
LoadedRays load_rays(const std::string& path);

}  // namespace hypercone
