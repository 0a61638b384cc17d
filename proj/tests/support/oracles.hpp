#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hypercone/contraction.hpp"
#include "hypercone/hypergraph.hpp"
#include "hypercone/states.hpp"

// Slow, independent reference computations. Nothing here calls the library's
// min-cut, tuple or entropy code.
namespace oracle {

using namespace hypercone;

/// Every vertex subset W with the right boundary part; parties is a mask over
/// n + 1 parties (bit n is the purifier).
Rational min_cut(const Hypergraph& g, std::uint32_t parties);
EntropyVector entropy_vector(const Hypergraph& g);

/// Edge e crosses W iff it has members on both sides.
Rational cut_weight(const Hypergraph& g, std::uint64_t w_mask);

struct TupleVerdict {
  bool violated = false;
  std::vector<std::uint64_t> tuple;
  Rational lhs, rhs;
};

/// Lex-first violating k-subset of distinct domain strings, no pruning.
TupleVerdict check_rank(const ContractionMap& map, const Inequality& ineq, int k);

/// i^k of the k strings read column by column, straight from the definition.
Rational indicator_sum(const std::vector<std::uint64_t>& strings, int width, const std::vector<Rational>& weights);

std::complex<double> to_complex(Eisenstein z);

/// von Neumann entropy of the dense reduced density matrix, in the given base.
double state_entropy(const PartyState& state, std::uint32_t parties, int base);

/// Rank of the dense reduced density matrix (eigenvalues above 1e-9).
int state_rank(const PartyState& state, std::uint32_t parties);

}  // namespace oracle
