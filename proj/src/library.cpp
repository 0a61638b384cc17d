#include "hypercone/library.hpp"

#include <algorithm>
#include <cctype>

#include "appendix_tables.hpp"

namespace hypercone {

namespace {

QVector q_from_ints(int n, std::span<const int> values) {
  std::vector<Rational> entries(values.begin(), values.end());
  return QVector(n, std::move(entries));
}

ContractionMap map_for(const QVector& q, std::span<const std::uint64_t> f10) {
  const auto expanded = expand_rhs(q_to_terms(q));
  return decode_f10(f10, expanded.L(), expanded.columns());
}

LibraryEntry small_entry(std::string name, int n, const char* expr, std::vector<std::uint64_t> f10) {
  QVector q = terms_to_q(parse_inequality(expr, n));
  ContractionMap map = map_for(q, f10);
  return LibraryEntry{std::move(name), std::move(q), std::move(map), std::nullopt};
}

std::vector<LibraryEntry> build() {
  std::vector<LibraryEntry> out;
  out.push_back(small_entry("SA", 2, "S(A)+S(B) >= S(AB)", {0, 1, 1, 1}));
  out.push_back(small_entry("SSA", 3, "S(AB)+S(BC) >= S(B)+S(ABC)", {0, 1, 1, 3}));
  // LHS columns AB, AC, BC; RHS columns A, B, C, ABC.
  out.push_back(small_entry("MMI", 3, "S(AB)+S(AC)+S(BC) >= S(A)+S(B)+S(C)+S(ABC)", {0, 1, 1, 3, 1, 5, 9, 1}));
  out.push_back(small_entry("Ingleton", 4, "I(A:B|C)+I(A:B|D)+I(C:D)-I(A:B) >= 0",
                            {0, 1, 2, 3, 1, 5, 0, 1, 2, 0, 6, 2, 3, 1, 2, 0,
                             1, 3, 3, 11, 3, 1, 1, 3, 3, 1, 2, 3, 19, 3, 3, 1}));
  for (const auto& row : detail::appendix_rows()) {
    QVector q = q_from_ints(5, row.q);
    std::vector<std::uint64_t> f10(row.f10.begin(), row.f10.end());
    ContractionMap map = map_for(q, f10);
    const auto& p = row.published;
    out.push_back(LibraryEntry{"Q" + std::to_string(row.index), std::move(q), std::move(map),
                               PublishedMetadata{p.L, p.R, p.alpha_total, p.beta_total, p.checked_k}});
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

const std::vector<LibraryEntry>& builtin_library() {
  static const std::vector<LibraryEntry> library = build();
  return library;
}

const LibraryEntry* find_builtin(std::string_view name) {
  for (const auto& e : builtin_library())
    if (iequals(e.name, name)) return &e;
  return nullptr;
}

}  // namespace hypercone
