#include <algorithm>
#include <bit>
#include <limits>
#include <map>

#include "hypercone/contraction.hpp"
#include "hypercone/errors.hpp"
#include "hypercone/kernels.hpp"
#include "kernels/tuple_common.hpp"

namespace hypercone {

std::string to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::unsatisfiable: return "unsatisfiable";
    case SearchOutcome::budget_exceeded: return "budget-exceeded";
    case SearchOutcome::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kUnassigned = std::numeric_limits<std::uint64_t>::max();

using kernels::detail::Acc;

class Search {
 public:
  Search(const kernels::TupleProblem& problem, int k_target, std::uint64_t budget)
      : p_(problem), k_(k_target), budget_(budget), cmask_(kernels::detail::column_mask(problem.columns)) {}

  std::uint64_t nodes = 0;
  bool over_budget = false;

  // Would assigning image y to domain point x (on top of `assigned`) break the
  // i^k condition for some tuple of size <= k containing x?
  bool conflicts(std::uint64_t x, std::uint64_t y, const std::vector<std::uint64_t>& assigned) {
    tuple_.assign(1, x);
    imgs_.assign(1, y);
    return walk(kernels::detail::start(x, y), assigned, 0);
  }

  const std::vector<std::uint64_t>& last_tuple() const { return tuple_; }
  std::int64_t last_lhs = 0, last_rhs = 0;

 private:
  bool walk(const Acc& a, const std::vector<std::uint64_t>& assigned, std::size_t from) {
    for (std::size_t i = from; i < assigned.size(); ++i) {
      if (++nodes > budget_) {
        over_budget = true;
        return true;
      }
      const std::uint64_t z = assigned[i];
      const std::uint64_t fz = p_.images[z];
      const Acc b = kernels::detail::extend(a, z, fz, cmask_);
      tuple_.push_back(z);
      imgs_.push_back(fz);
      const std::int64_t lhs = kernels::detail::lhs_of(p_, b);
      const std::int64_t rhs = kernels::detail::rhs_of(p_, b);
      if (lhs < rhs) {
        last_lhs = lhs;
        last_rhs = rhs;
        return true;
      }
      // Smaller tuples through x are all checked, and those avoiding x were
      // checked when their own last point was assigned, so both prunes apply.
      const bool descend = static_cast<int>(tuple_.size()) < k_ && lhs < p_.rhs_cap &&
                           !kernels::detail::degenerate(b, imgs_.data(), static_cast<int>(imgs_.size()), cmask_);
      if (descend && walk(b, assigned, i + 1)) return true;
      tuple_.pop_back();
      imgs_.pop_back();
    }
    return false;
  }

 public:
  kernels::TupleProblem p_;

 private:
  int k_;
  std::uint64_t budget_;
  std::uint64_t cmask_;
  std::vector<std::uint64_t> tuple_, imgs_;
};

}  // namespace

SearchResult search_contraction(const Inequality& ineq, const SearchOptions& options) {
  if (options.k_target < 2) throw InputError("k_target must be at least 2");
  const ExpandedInequality expanded = expand_rhs(ineq);
  const OccurrenceVectors occ = occurrence_vectors(expanded);
  const int L = expanded.L();
  const int Rp = expanded.columns();
  if (L > 16) throw ResourceError("search limited to 16 LHS terms");
  const std::uint64_t domain = std::uint64_t{1} << L;
  const std::uint64_t codomain = std::uint64_t{1} << Rp;

  std::vector<Rational> weights;
  for (const auto& t : expanded.lhs) weights.push_back(t.coefficient);
  kernels::TupleProblem problem =
      kernels::make_tuple_problem(std::vector<std::uint64_t>(domain, 0), L, Rp, weights);

  SearchResult result;
  std::vector<std::uint64_t>& f = problem.images;
  std::fill(f.begin(), f.end(), kUnassigned);

  // Fixed points.
  for (int party = 0; party <= ineq.parties(); ++party) {
    const std::uint64_t x = occ.x[party], y = occ.y[party];
    if (f[x] != kUnassigned && f[x] != y) {
      result.outcome = SearchOutcome::unsatisfiable;
      result.witness = Witness{{x}, 0, 0};
      return result;
    }
    f[x] = y;
  }
  std::vector<std::uint64_t> fixed;
  for (std::uint64_t x = 0; x < domain; ++x)
    if (f[x] != kUnassigned) fixed.push_back(x);

  // The occurrence vectors alone must already contract at every k <= k_target.
  for (int k = 2; k <= options.k_target && k <= static_cast<int>(fixed.size()); ++k) {
    bool violated = false;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      Acc a = kernels::detail::start(fixed[pick[0]], f[fixed[pick[0]]]);
      for (int i = 1; i < k; ++i)
        a = kernels::detail::extend(a, fixed[pick[i]], f[fixed[pick[i]]], kernels::detail::column_mask(Rp));
      const std::int64_t lhs = kernels::detail::lhs_of(problem, a), rhs = kernels::detail::rhs_of(problem, a);
      if (lhs < rhs) {
        Witness w;
        for (int i : pick) w.tuple.push_back(fixed[i]);
        w.lhs_distance = Rational(mpz_class(lhs), mpz_class(problem.rhs_unit));
        w.rhs_distance = Rational(mpz_class(rhs), mpz_class(problem.rhs_unit));
        w.lhs_distance.canonicalize();
        w.rhs_distance.canonicalize();
        result.outcome = SearchOutcome::unsatisfiable;
        result.witness = std::move(w);
        result.witness_k = k;
        violated = true;
        break;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == static_cast<int>(fixed.size()) - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (violated) return result;
  }

  // Free points, nearest to a fixed point first.
  std::vector<std::uint64_t> order;
  std::vector<int> distance(domain, std::numeric_limits<int>::max());
  for (std::uint64_t x = 0; x < domain; ++x) {
    for (std::uint64_t z : fixed) distance[x] = std::min(distance[x], std::popcount(x ^ z));
    if (f[x] == kUnassigned) order.push_back(x);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) { return distance[a] < distance[b]; });

  Search search(problem, options.k_target, options.budget);
  std::vector<std::uint64_t> assigned = fixed;
  // Candidate lists are built lazily per depth.
  std::vector<std::vector<std::uint64_t>> candidates(order.size());
  std::vector<std::size_t> cursor(order.size(), 0);

  auto rank_candidates = [&](std::uint64_t x) {
    // Neighbors: assigned points at minimal Hamming distance from x.
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t z : assigned) best = std::min(best, std::popcount(x ^ z));
    std::vector<std::uint64_t> near;
    for (std::uint64_t z : assigned)
      if (std::popcount(x ^ z) == best) near.push_back(search.p_.images[z]);
    std::vector<std::pair<int, std::uint64_t>> scored;
    scored.reserve(codomain);
    for (std::uint64_t c = 0; c < codomain; ++c) {
      int cost = 0;
      for (std::uint64_t y : near) cost += std::popcount(c ^ y);
      scored.emplace_back(cost, c);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::uint64_t> out;
    out.reserve(codomain);
    for (const auto& s : scored) out.push_back(s.second);
    return out;
  };

  std::size_t depth = 0;
  if (!order.empty()) candidates[0] = rank_candidates(order[0]);
  while (depth < order.size()) {
    const std::uint64_t x = order[depth];
    bool placed = false;
    while (cursor[depth] < candidates[depth].size()) {
      const std::uint64_t y = candidates[depth][cursor[depth]++];
      const bool bad = search.conflicts(x, y, assigned);
      if (search.over_budget) {
        result.outcome = SearchOutcome::budget_exceeded;
        result.nodes = search.nodes;
        return result;
      }
      if (!bad) {
        search.p_.images[x] = y;
        assigned.push_back(x);
        placed = true;
        break;
      }
    }
    if (placed) {
      ++depth;
      if (depth < order.size()) {
        candidates[depth] = rank_candidates(order[depth]);
        cursor[depth] = 0;
      }
      continue;
    }
    // Backtrack.
    candidates[depth].clear();
    if (depth == 0) {
      result.outcome = SearchOutcome::exhausted;
      result.nodes = search.nodes;
      return result;
    }
    --depth;
    search.p_.images[order[depth]] = kUnassigned;
    assigned.pop_back();
  }

  ContractionMap map{L, Rp, search.p_.images};
  VerifyOptions verify;
  verify.k_max = options.k_target;
  verify.threads = options.threads;
  result.verification = verify_contraction(map, ineq, verify);
  result.nodes = search.nodes;
  if (!result.verification->all_verified())
    throw std::logic_error("search produced a map that fails re-verification");
  result.map = std::move(map);
  result.outcome = SearchOutcome::found;
  return result;
}

}  // namespace hypercone
