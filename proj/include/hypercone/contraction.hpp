#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypercone/inequality.hpp"

namespace hypercone {

struct BitString {
  int width = 0;
  std::uint64_t bits = 0;  // bit width-1 is the first term

  bool at(int column) const { return bits >> (width - 1 - column) & 1; }
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
};

/// f : {0,1}^L -> {0,1}^R', image of domain value d stored at images[d].
struct ContractionMap {
  int L = 0;
  int Rp = 0;
  std::vector<std::uint64_t> images;

  BitString operator()(std::uint64_t x) const { return {Rp, images.at(x)}; }
};

int indicator_k(std::span<const int> bits);

/// sum_l w_l * i^k(column l); k = strings.size() >= 2.
Rational weighted_indicator(std::span<const BitString> strings, std::span<const Rational> weights);

/// True iff the full tuple scores strictly more than every (k-1)-subset.
bool spans_full_polytope(std::span<const BitString> strings, std::span<const Rational> weights);

ContractionMap decode_f10(std::span<const std::uint64_t> values, int L, int Rp);
std::vector<std::uint64_t> encode_f10(const ContractionMap& map);

enum class RankStatus { verified, violated, budget_exceeded, skipped };

std::string to_string(RankStatus status);

struct Witness {
  std::vector<std::uint64_t> tuple;  // domain strings, increasing
  Rational lhs_distance;
  Rational rhs_distance;
};

struct RankReport {
  int k = 0;
  RankStatus status = RankStatus::skipped;
  std::uint64_t examined = 0;      // tuples whose image was evaluated
  std::uint64_t pruned = 0;        // subtrees cut by either prune
  std::uint64_t degenerate = 0;    // of which by the polytope prune
  std::optional<Witness> witness;
};

struct ContractionReport {
  std::vector<RankReport> ranks;  // k = 2 .. k_max
  int k_max = 0;
  Rational beta_total;
  bool fully_proved = false;      // k_max >= beta_T and every rank verified

  bool all_verified() const;
  /// First rank that is not verified, or nullptr.
  const RankReport* first_failure() const;
};

struct VerifyOptions {
  int k_max = 2;
  std::uint64_t budget = 5'000'000'000ULL;  // per rank, counted in search nodes
  bool prune = true;
  int threads = 0;
  /// Stop at the first rank that is not verified.
  bool stop_on_failure = true;
};

/// Checks occurrence images first (MapInvalidError naming the party), then the
/// i^k contraction property for every k-subset of distinct domain strings.
ContractionReport verify_contraction(const ContractionMap& map, const Inequality& ineq, const VerifyOptions& options);

struct SearchOptions {
  int k_target = 2;
  std::uint64_t budget = 50'000'000;  // backtracking nodes
  int threads = 0;
};

enum class SearchOutcome { found, unsatisfiable, budget_exceeded, exhausted };

std::string to_string(SearchOutcome outcome);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<ContractionMap> map;
  std::optional<ContractionReport> verification;
  std::optional<Witness> witness;  // for unsatisfiable: violating occurrence tuple
  int witness_k = 0;
  std::uint64_t nodes = 0;
};

SearchResult search_contraction(const Inequality& ineq, const SearchOptions& options);

}  // namespace hypercone
