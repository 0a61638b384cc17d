#pragma once

#include <random>

#include "hypercone/hypergraph.hpp"

namespace hypercone {

struct RandomGraphParams {
  int n = 3;
  int max_bulk = 3;
  int max_rank = 5;
  int min_edges = 1;
  int max_edges = 7;
  int max_numerator = 5;
  int max_denominator = 4;
  /// Probability that an edge weight is zero.
  double zero_weight = 0.05;
};

/// Boundary vertices "A".."O" first, then bulk "s1".."sb". Every edge has at
/// least two distinct members and size at most max_rank.
Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomGraphParams& params);

}  // namespace hypercone
