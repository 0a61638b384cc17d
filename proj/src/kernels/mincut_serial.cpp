#include <algorithm>
#include <cstdint>
#include <optional>

#include "hypercone/errors.hpp"
#include "hypercone/kernels.hpp"

namespace hypercone::kernels {

MinCutResult min_cut_serial(const Hypergraph& graph, SubsystemLabel subsystem, int bulk_limit) {
  check_subsystem(graph.parties(), subsystem);
  const auto& bulk = graph.bulk_vertices();
  const int b = static_cast<int>(bulk.size());
  if (b > bulk_limit) throw ResourceError(std::to_string(b) + " bulk vertices exceed the limit of " + std::to_string(bulk_limit));

  std::vector<int> fixed;
  for (int p = 0; p < graph.parties(); ++p)
    if (subsystem.mask & (PartyMask{1} << p)) fixed.push_back(graph.boundary_vertex(p));

  std::optional<Rational> best;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
    Cut cut{fixed};
    for (int j = 0; j < b; ++j)
      if (mask >> (b - 1 - j) & 1) cut.included.push_back(bulk[j]);
    std::sort(cut.included.begin(), cut.included.end());
    Rational w = cut_weight(graph, cut);
    // Ascending mask order: strict improvement keeps the smallest mask.
    if (!best || w < *best) {
      best = w;
      best_mask = mask;
    }
  }

  Cut cut{fixed};
  for (int j = 0; j < b; ++j)
    if (best_mask >> (b - 1 - j) & 1) cut.included.push_back(bulk[j]);
  std::sort(cut.included.begin(), cut.included.end());
  return {*best, cut};
}

}  // namespace hypercone::kernels
