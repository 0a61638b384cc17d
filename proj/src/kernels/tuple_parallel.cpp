#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

#include "hypercone/errors.hpp"
#include "tuple_common.hpp"

namespace hypercone::kernels {

namespace {

using detail::Acc;

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> over_budget{false};
  std::atomic<std::uint64_t> first_violation{std::numeric_limits<std::uint64_t>::max()};
};

// Depth-first walk of all k-subsets starting with `first`, explicit stack.
TupleOutcome run_shard(const TupleProblem& p, int k, const TupleFlags& flags, std::uint64_t first, Shared& shared) {
  // Small budgets get a finer flush so the overshoot stays proportional.
  const std::uint64_t kFlush = std::clamp<std::uint64_t>(flags.budget / 64, 1, 1 << 12);
  const std::uint64_t n = p.images.size();
  const std::uint64_t cmask = detail::column_mask(p.columns);
  TupleOutcome out;
  std::uint64_t local = 0;

  std::vector<std::uint64_t> tuple(k), imgs(k);
  std::vector<Acc> acc(k);
  tuple[0] = first;
  imgs[0] = p.images[first];
  acc[0] = detail::start(first, imgs[0]);
  ++out.nodes;
  ++local;
  if (k == 1) return out;

  // next[j]: candidate for position j.
  std::vector<std::uint64_t> next(k);
  int j = 1;
  next[1] = first + 1;
  while (j >= 1) {
    if (next[j] + (k - j - 1) >= n) {
      --j;
      continue;
    }
    const std::uint64_t x = next[j]++;
    const std::uint64_t y = p.images[x];
    tuple[j] = x;
    imgs[j] = y;
    acc[j] = detail::extend(acc[j - 1], x, y, cmask);
    ++out.nodes;
    if (++local == kFlush) {
      local = 0;
      if (shared.nodes.fetch_add(kFlush, std::memory_order_relaxed) + kFlush > flags.budget) {
        shared.over_budget.store(true, std::memory_order_relaxed);
      }
      if (shared.over_budget.load(std::memory_order_relaxed) ||
          shared.first_violation.load(std::memory_order_relaxed) < first) {
        out.status = TupleStatus::budget_exceeded;
        return out;
      }
    }
    const int size = j + 1;
    const std::int64_t lhs = detail::lhs_of(p, acc[j]);
    if (size == k) {
      ++out.examined;
      const std::int64_t rhs = detail::rhs_of(p, acc[j]);
      if (lhs < rhs) {
        out.status = TupleStatus::violated;
        out.witness = tuple;
        out.witness_lhs = lhs;
        out.witness_rhs = rhs;
        std::uint64_t cur = shared.first_violation.load();
        while (first < cur && !shared.first_violation.compare_exchange_weak(cur, first)) {
        }
        return out;
      }
      continue;
    }
    if (flags.prune_beta && lhs >= p.rhs_cap) {
      ++out.pruned;
      continue;
    }
    if (flags.prune_polytope && size >= 2 && detail::degenerate(acc[j], imgs.data(), size, cmask)) {
      ++out.pruned;
      ++out.degenerate;
      continue;
    }
    ++j;
    next[j] = x + 1;
  }
  shared.nodes.fetch_add(local, std::memory_order_relaxed);
  return out;
}

}  // namespace

TupleOutcome verify_rank_parallel(const TupleProblem& problem, int k, const TupleFlags& flags, int threads) {
  if (k < 2) throw InputError("rank k must be at least 2");
  const std::uint64_t n = problem.images.size();
  if (static_cast<std::uint64_t>(k) > n) return {};
  const std::int64_t shards = static_cast<std::int64_t>(n - (k - 1));
  std::vector<TupleOutcome> results(shards);
  std::vector<char> ran(shards, 0);
  Shared shared;

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1) if (threads > 1)
  for (std::int64_t s = 0; s < shards; ++s) {
    if (shared.over_budget.load(std::memory_order_relaxed)) continue;
    if (shared.first_violation.load(std::memory_order_relaxed) < static_cast<std::uint64_t>(s)) continue;
    results[s] = run_shard(problem, k, flags, static_cast<std::uint64_t>(s), shared);
    ran[s] = 1;
  }

  // Deterministic merge: everything up to the first violating shard.
  TupleOutcome out;
  const std::uint64_t violating = shared.first_violation.load();
  for (std::int64_t s = 0; s < shards; ++s) {
    if (static_cast<std::uint64_t>(s) > violating) break;
    const TupleOutcome& r = results[s];
    const bool complete = ran[s] && (r.status != TupleStatus::budget_exceeded);
    out.nodes += r.nodes;
    out.examined += r.examined;
    out.pruned += r.pruned;
    out.degenerate += r.degenerate;
    if (!complete) {
      out.status = TupleStatus::budget_exceeded;
      return out;
    }
    if (r.status == TupleStatus::violated) {
      out.status = TupleStatus::violated;
      out.witness = r.witness;
      out.witness_lhs = r.witness_lhs;
      out.witness_rhs = r.witness_rhs;
      return out;
    }
  }
  if (shared.over_budget.load()) out.status = TupleStatus::budget_exceeded;
  if (out.nodes > flags.budget) out.status = TupleStatus::budget_exceeded;
  return out;
}

}  // namespace hypercone::kernels
