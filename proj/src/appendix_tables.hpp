#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hypercone::detail {

struct PublishedRow {
  int L, R, alpha_total, beta_total, checked_k;
};

// Five-party inequalities with their maps, as printed. q is in canonical
// subsystem order; f10 has 2^L entries in increasing domain order.
struct AppendixRow {
  int index;
  std::span<const int> q;
  std::span<const std::uint32_t> f10;
  PublishedRow published;
};

const std::vector<AppendixRow>& appendix_rows();

}  // namespace hypercone::detail
