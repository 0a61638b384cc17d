#include "hypercone/contraction.hpp"

#include "hypercone/errors.hpp"
#include "hypercone/kernels.hpp"
#include "hypercone/parallel.hpp"

namespace hypercone {

std::string BitString::str() const {
  std::string s(width, '0');
  for (int c = 0; c < width; ++c)
    if (at(c)) s[c] = '1';
  return s;
}

int indicator_k(std::span<const int> bits) {
  if (bits.size() < 2) throw InputError("indicator needs at least two bits");
  for (int b : bits)
    if (b != bits[0]) return 1;
  return 0;
}

Rational weighted_indicator(std::span<const BitString> strings, std::span<const Rational> weights) {
  if (strings.size() < 2) throw InputError("weighted indicator needs at least two strings");
  const int width = strings[0].width;
  for (const auto& s : strings)
    if (s.width != width) throw InputError("bit strings of different widths");
  if (static_cast<int>(weights.size()) != width) throw InputError("one weight per column required");
  Rational total = 0;
  std::vector<int> column(strings.size());
  for (int c = 0; c < width; ++c) {
    for (std::size_t i = 0; i < strings.size(); ++i) column[i] = strings[i].at(c);
    if (indicator_k(column)) total += weights[c];
  }
  return total;
}

bool spans_full_polytope(std::span<const BitString> strings, std::span<const Rational> weights) {
  const std::size_t k = strings.size();
  if (k < 2) throw InputError("polytope test needs at least two strings");
  const Rational full = weighted_indicator(strings, weights);
  std::vector<BitString> sub;
  for (std::size_t drop = 0; drop < k; ++drop) {
    sub.clear();
    for (std::size_t i = 0; i < k; ++i)
      if (i != drop) sub.push_back(strings[i]);
    // A single remaining string spans nothing.
    const Rational part = sub.size() >= 2 ? weighted_indicator(sub, weights) : Rational(0);
    if (!(full > part)) return false;
  }
  return true;
}

ContractionMap decode_f10(std::span<const std::uint64_t> values, int L, int Rp) {
  if (L < 0 || L > 30) throw InputError("domain width out of range");
  if (Rp < 1 || Rp > 63) throw InputError("image width out of range");
  if (values.size() != (std::size_t{1} << L))
    throw InputError("expected " + std::to_string(std::size_t{1} << L) + " images, got " + std::to_string(values.size()));
  for (std::size_t d = 0; d < values.size(); ++d)
    if (values[d] >> Rp)
      throw InputError("image " + std::to_string(values[d]) + " at domain " + std::to_string(d) + " exceeds " +
                       std::to_string(Rp) + " bits");
  return ContractionMap{L, Rp, std::vector<std::uint64_t>(values.begin(), values.end())};
}

std::vector<std::uint64_t> encode_f10(const ContractionMap& map) { return map.images; }

std::string to_string(RankStatus status) {
  switch (status) {
    case RankStatus::verified: return "verified";
    case RankStatus::violated: return "violated";
    case RankStatus::budget_exceeded: return "budget-exceeded";
    case RankStatus::skipped: return "skipped";
  }
  return "?";
}

bool ContractionReport::all_verified() const {
  for (const auto& r : ranks)
    if (r.status != RankStatus::verified) return false;
  return true;
}

const RankReport* ContractionReport::first_failure() const {
  for (const auto& r : ranks)
    if (r.status != RankStatus::verified) return &r;
  return nullptr;
}

ContractionReport verify_contraction(const ContractionMap& map, const Inequality& ineq, const VerifyOptions& options) {
  const ExpandedInequality expanded = expand_rhs(ineq);
  if (map.L != expanded.L() || map.Rp != expanded.columns())
    throw InputError("map is " + std::to_string(map.L) + " -> " + std::to_string(map.Rp) + " bits but the inequality needs " +
                     std::to_string(expanded.L()) + " -> " + std::to_string(expanded.columns()));
  if (map.images.size() != (std::size_t{1} << map.L)) throw InputError("map is not total");
  if (options.k_max < 2) throw InputError("k_max must be at least 2");

  const OccurrenceVectors occ = occurrence_vectors(expanded);
  for (int p = 0; p <= ineq.parties(); ++p) {
    if (map.images[occ.x[p]] != occ.y[p]) {
      const std::string label = party_label(ineq.parties(), p);
      throw MapInvalidError("map sends the occurrence vector of " + label + " (" + BitString{occ.L, occ.x[p]}.str() +
                                ") to " + BitString{occ.columns, map.images[occ.x[p]]}.str() + " instead of " +
                                BitString{occ.columns, occ.y[p]}.str(),
                            label);
    }
  }

  std::vector<Rational> weights;
  for (const auto& t : expanded.lhs) weights.push_back(t.coefficient);
  const kernels::TupleProblem problem = kernels::make_tuple_problem(map.images, map.L, map.Rp, weights);
  const int threads = resolve_threads(options.threads);

  ContractionReport report;
  report.k_max = options.k_max;
  report.beta_total = ineq.beta_total();
  bool lower_verified = true;
  bool stopped = false;
  for (int k = 2; k <= options.k_max; ++k) {
    RankReport rank;
    rank.k = k;
    if (stopped) {
      report.ranks.push_back(rank);
      continue;
    }
    kernels::TupleFlags flags;
    flags.prune_beta = options.prune;
    flags.prune_polytope = options.prune && k >= 3 && lower_verified;
    flags.budget = options.budget;
    const kernels::TupleOutcome outcome = kernels::verify_rank_parallel(problem, k, flags, threads);
    rank.examined = outcome.examined;
    rank.pruned = outcome.pruned;
    rank.degenerate = outcome.degenerate;
    switch (outcome.status) {
      case kernels::TupleStatus::verified: rank.status = RankStatus::verified; break;
      case kernels::TupleStatus::violated: rank.status = RankStatus::violated; break;
      case kernels::TupleStatus::budget_exceeded: rank.status = RankStatus::budget_exceeded; break;
    }
    if (outcome.status == kernels::TupleStatus::violated) {
      Witness w;
      w.tuple = outcome.witness;
      w.lhs_distance = Rational(outcome.witness_lhs, problem.rhs_unit);
      w.rhs_distance = Rational(outcome.witness_rhs, problem.rhs_unit);
      w.lhs_distance.canonicalize();
      w.rhs_distance.canonicalize();
      rank.witness = std::move(w);
    }
    if (rank.status != RankStatus::verified) {
      lower_verified = false;
      if (options.stop_on_failure) stopped = true;
    }
    report.ranks.push_back(std::move(rank));
  }
  report.fully_proved = report.all_verified() && Rational(options.k_max) >= report.beta_total;
  return report;
}

}  // namespace hypercone
