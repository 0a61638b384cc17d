#pragma once

#include <map>

#include "hypercone/states.hpp"

namespace hypercone::detail {

/// Bulk-vertex tensors to use instead of the registry entry, keyed by vertex.
using VertexOverrides = std::map<int, Tensor>;

PartyState build_state_with(const Hypergraph& unit_graph, const BuildOptions& options, const VertexOverrides& overrides);

/// Leg degrees of bulk vertices and the dimension chosen for them.
struct Degrees {
  std::vector<int> degree;  // by vertex, 0 for boundary
  int D = 2;
};

Degrees bulk_degrees(const Hypergraph& unit_graph);

/// new leg i is old leg order[i].
Tensor permute(const Tensor& t, const std::vector<int>& order);

}  // namespace hypercone::detail
