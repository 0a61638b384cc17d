#pragma once

// Serial reference kernels and their parallel counterparts. The public
// entry points in hypergraph.hpp and contraction.hpp dispatch to the parallel
// versions; the serial ones are kept as test oracles and benchmark baselines.

#include <cstdint>
#include <optional>
#include <vector>

#include "hypercone/hypergraph.hpp"

namespace hypercone::kernels {

/// Every bulk subset, every cut weight evaluated from scratch in exact
/// rationals. Same tie-break as the parallel kernel.
MinCutResult min_cut_serial(const Hypergraph& graph, SubsystemLabel subsystem, int bulk_limit = 24);

/// Gray-code enumeration with incremental crossing counts over int64 weights,
/// ranges split across `threads` workers. Falls back to the serial kernel if
/// the scaled weights do not fit in 64 bits.
MinCutResult min_cut_gray(const Hypergraph& graph, SubsystemLabel subsystem, int bulk_limit, int threads);

/// One rank of the contraction check in integer form. LHS column weights are
/// scaled by a common denominator D; every expanded RHS column weighs D.
struct TupleProblem {
  int L = 0;
  int columns = 0;
  std::vector<std::uint64_t> images;       // 2^L entries
  std::vector<std::int64_t> lhs_by_mask;   // weight of any set of split LHS columns
  std::int64_t rhs_unit = 1;               // D
  std::int64_t rhs_cap = 0;                // D * beta_T, the largest possible RHS distance
};

TupleProblem make_tuple_problem(const std::vector<std::uint64_t>& images, int L, int columns,
                                const std::vector<Rational>& lhs_weights);

struct TupleFlags {
  bool prune_beta = true;      // skip subtrees whose partial LHS distance reaches rhs_cap
  bool prune_polytope = true;  // skip subtrees whose image tuple is degenerate
  std::uint64_t budget = ~std::uint64_t{0};
};

enum class TupleStatus { verified, violated, budget_exceeded };

struct TupleOutcome {
  TupleStatus status = TupleStatus::verified;
  std::uint64_t nodes = 0;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t degenerate = 0;
  std::vector<std::uint64_t> witness;
  std::int64_t witness_lhs = 0;
  std::int64_t witness_rhs = 0;
};

/// Recursive lexicographic enumeration of k-subsets of distinct domain strings;
/// stops at the first violation, which is therefore the lexicographically
/// smallest one.
TupleOutcome verify_rank_serial(const TupleProblem& problem, int k, const TupleFlags& flags);

/// Same enumeration sharded on the first element. Verdict, witness and counts
/// equal the serial ones whenever the budget is not hit.
TupleOutcome verify_rank_parallel(const TupleProblem& problem, int k, const TupleFlags& flags, int threads);

}  // namespace hypercone::kernels
