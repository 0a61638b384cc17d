#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercone/contraction.hpp"
#include "hypercone/inequality.hpp"

namespace hypercone {

struct PublishedMetadata {
  int L, R, alpha_total, beta_total, checked_k;
};

struct LibraryEntry {
  std::string name;
  QVector q;
  std::optional<ContractionMap> map;
  std::optional<PublishedMetadata> published;  // five-party entries only, as printed
};

/// SA, SSA, MMI, Ingleton, Q1..Q24.
const std::vector<LibraryEntry>& builtin_library();

/// Case-insensitive lookup; nullptr when absent.
const LibraryEntry* find_builtin(std::string_view name);

}  // namespace hypercone
