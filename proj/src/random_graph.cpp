#include "hypercone/random_graph.hpp"

#include <algorithm>
#include <numeric>

#include "hypercone/errors.hpp"

namespace hypercone {

Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomGraphParams& params) {
  check_party_count(params.n);
  if (params.max_rank < 2 || params.max_edges < params.min_edges || params.max_denominator < 1)
    throw InputError("invalid random graph parameters");
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const int bulk = uniform(0, params.max_bulk);
  std::vector<std::string> names;
  std::vector<int> boundary;
  for (int p = 0; p <= params.n; ++p) {
    boundary.push_back(p);
    names.push_back(party_label(params.n, p));
  }
  for (int b = 0; b < bulk; ++b) names.push_back("s" + std::to_string(b + 1));
  const int v_count = static_cast<int>(names.size());

  std::vector<int> all(v_count);
  std::iota(all.begin(), all.end(), 0);
  std::vector<Hyperedge> edges;
  const int edge_count = uniform(params.min_edges, params.max_edges);
  std::bernoulli_distribution zero(params.zero_weight);
  for (int e = 0; e < edge_count; ++e) {
    const int size = uniform(2, std::min(params.max_rank, v_count));
    std::shuffle(all.begin(), all.end(), rng);
    Hyperedge edge{std::vector<int>(all.begin(), all.begin() + size), 0};
    if (!zero(rng)) {
      edge.weight = Rational(uniform(1, params.max_numerator), uniform(1, params.max_denominator));
      edge.weight.canonicalize();
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(params.n, std::move(names), std::move(boundary), std::move(edges));
}

}  // namespace hypercone
