#include <stdexcept>

#include "hypercone/errors.hpp"
#include "tuple_common.hpp"

namespace hypercone::kernels {

TupleProblem make_tuple_problem(const std::vector<std::uint64_t>& images, int L, int columns,
                                const std::vector<Rational>& lhs_weights) {
  if (L < 1 || L > 20) throw InputError("LHS width " + std::to_string(L) + " outside [1, 20]");
  if (columns < 1 || columns > 63) throw InputError("RHS width outside [1, 63]");
  if (images.size() != (std::size_t{1} << L)) throw InputError("map has the wrong number of images");
  if (static_cast<int>(lhs_weights.size()) != L) throw InputError("one LHS weight per column required");

  TupleProblem p;
  p.L = L;
  p.columns = columns;
  p.images = images;
  mpz_class den = common_denominator(lhs_weights);
  std::vector<std::int64_t> w(L);
  for (int l = 0; l < L; ++l) {
    mpz_class scaled = lhs_weights[l].get_num() * (den / lhs_weights[l].get_den());
    if (!scaled.fits_slong_p() || scaled < 0) throw InputError("LHS weight out of range");
    w[l] = scaled.get_si();
  }
  if (!den.fits_slong_p()) throw InputError("weight denominators too large");
  p.rhs_unit = den.get_si();
  p.rhs_cap = p.rhs_unit * columns;
  // Column l is bit L-1-l.
  p.lhs_by_mask.assign(std::size_t{1} << L, 0);
  for (std::size_t m = 1; m < p.lhs_by_mask.size(); ++m) {
    const int bit = std::countr_zero(m);
    p.lhs_by_mask[m] = p.lhs_by_mask[m & (m - 1)] + w[L - 1 - bit];
  }
  return p;
}

namespace {

using detail::Acc;

struct Serial {
  const TupleProblem& p;
  const TupleFlags& flags;
  int k;
  std::uint64_t n;
  std::uint64_t cmask;
  TupleOutcome out;
  std::vector<std::uint64_t> tuple, imgs;
  bool stop = false;

  // Visits every extension of the current partial tuple (size j, state a).
  void descend(const Acc& a, int j) {
    for (std::uint64_t x = tuple[j - 1] + 1; x + (k - j - 1) < n && !stop; ++x) {
      const std::uint64_t y = p.images[x];
      const Acc b = detail::extend(a, x, y, cmask);
      tuple[j] = x;
      imgs[j] = y;
      visit(b, j + 1);
    }
  }

  void visit(const Acc& a, int size) {
    if (++out.nodes > flags.budget) {
      out.status = TupleStatus::budget_exceeded;
      stop = true;
      return;
    }
    const std::int64_t lhs = detail::lhs_of(p, a);
    if (size == k) {
      ++out.examined;
      const std::int64_t rhs = detail::rhs_of(p, a);
      if (lhs < rhs) {
        out.status = TupleStatus::violated;
        out.witness.assign(tuple.begin(), tuple.begin() + k);
        out.witness_lhs = lhs;
        out.witness_rhs = rhs;
        stop = true;
      }
      return;
    }
    if (flags.prune_beta && lhs >= p.rhs_cap) {
      ++out.pruned;
      return;
    }
    if (flags.prune_polytope && size >= 2 && detail::degenerate(a, imgs.data(), size, cmask)) {
      ++out.pruned;
      ++out.degenerate;
      return;
    }
    descend(a, size);
  }
};

}  // namespace

TupleOutcome verify_rank_serial(const TupleProblem& problem, int k, const TupleFlags& flags) {
  if (k < 2) throw InputError("rank k must be at least 2");
  Serial s{problem, flags, k, problem.images.size(), detail::column_mask(problem.columns), {}, {}, {}};
  s.tuple.assign(k, 0);
  s.imgs.assign(k, 0);
  for (std::uint64_t x = 0; x + (k - 1) < s.n && !s.stop; ++x) {
    s.tuple[0] = x;
    s.imgs[0] = problem.images[x];
    s.visit(detail::start(x, problem.images[x]), 1);
  }
  return s.out;
}

}  // namespace hypercone::kernels
