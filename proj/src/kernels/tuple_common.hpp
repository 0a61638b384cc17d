#pragma once

#include <bit>
#include <cstdint>

#include "hypercone/kernels.hpp"

namespace hypercone::kernels::detail {

// Column bookkeeping of a partial tuple. For the image side it keeps enough
// multiplicity (>= 1 and >= 2 ones / zeros per column) to tell whether an
// element is the unique 1 or unique 0 of some column.
struct Acc {
  std::uint64_t lor, land, ior, iand, ones2, zeros2;
};

inline Acc start(std::uint64_t x, std::uint64_t y) { return {x, x, y, y, 0, 0}; }

inline Acc extend(const Acc& a, std::uint64_t x, std::uint64_t y, std::uint64_t cmask) {
  const std::uint64_t zeros1 = ~a.iand & cmask;
  return {a.lor | x, a.land & x, a.ior | y, a.iand & y, a.ones2 | (a.ior & y), a.zeros2 | (zeros1 & ~y & cmask)};
}

inline std::int64_t lhs_of(const TupleProblem& p, const Acc& a) { return p.lhs_by_mask[a.lor ^ a.land]; }

inline std::int64_t rhs_of(const TupleProblem& p, const Acc& a) {
  return p.rhs_unit * std::popcount(a.ior ^ a.iand);
}

// True when some element can be dropped without lowering the image-side
// indicator, i.e. it is the unique 1 or unique 0 of no column.
inline bool degenerate(const Acc& a, const std::uint64_t* imgs, int count, std::uint64_t cmask) {
  const std::uint64_t u1 = a.ior & ~a.ones2;
  const std::uint64_t u0 = ~a.iand & cmask & ~a.zeros2;
  for (int e = 0; e < count; ++e) {
    const std::uint64_t y = imgs[e];
    if (((y & u1) | (~y & u0)) == 0) return true;
  }
  return false;
}

inline std::uint64_t column_mask(int columns) {
  return columns >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << columns) - 1;
}

}  // namespace hypercone::kernels::detail
