#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "hypercone/errors.hpp"
#include "hypercone/kernels.hpp"

namespace hypercone::kernels {

namespace {

struct Prepared {
  std::vector<std::int64_t> weight;
  std::vector<int> size;
  std::vector<int> base_in;                  // boundary members on the W side
  std::vector<std::vector<int>> incidence;   // bulk position -> edges
  std::int64_t constant = 0;                 // edges with no bulk members that are cut
  mpz_class denominator;
};

// Scales weights to integers. Returns false when any partial sum could leave int64.
bool prepare(const Hypergraph& graph, SubsystemLabel subsystem, Prepared& out) {
  std::vector<Rational> weights;
  for (const auto& e : graph.edges()) weights.push_back(e.weight);
  out.denominator = common_denominator(weights);

  const auto& bulk = graph.bulk_vertices();
  std::vector<int> bulk_pos(graph.vertex_count(), -1);
  for (std::size_t j = 0; j < bulk.size(); ++j) bulk_pos[bulk[j]] = static_cast<int>(j);
  std::vector<char> in_w(graph.vertex_count(), 0);
  for (int p = 0; p < graph.parties(); ++p)
    if (subsystem.mask & (PartyMask{1} << p)) in_w[graph.boundary_vertex(p)] = 1;

  out.incidence.assign(bulk.size(), {});
  mpz_class total = 0;
  const mpz_class limit = mpz_class(std::numeric_limits<std::int64_t>::max() / 2);
  for (const auto& e : graph.edges()) {
    if (e.weight == 0) continue;
    mpz_class scaled = e.weight.get_num() * (out.denominator / e.weight.get_den());
    total += scaled;
    if (total > limit) return false;
    int inside = 0;
    bool has_bulk = false;
    for (int v : e.members) {
      if (bulk_pos[v] >= 0)
        has_bulk = true;
      else
        inside += in_w[v];
    }
    const int size = static_cast<int>(e.members.size());
    const std::int64_t w = scaled.get_si();
    if (!has_bulk) {
      if (inside > 0 && inside < size) out.constant += w;
      continue;
    }
    const int id = static_cast<int>(out.weight.size());
    out.weight.push_back(w);
    out.size.push_back(size);
    out.base_in.push_back(inside);
    for (int v : e.members)
      if (bulk_pos[v] >= 0) out.incidence[bulk_pos[v]].push_back(id);
  }
  return true;
}

struct Best {
  std::int64_t weight = std::numeric_limits<std::int64_t>::max();
  std::uint64_t mask = 0;

  void offer(std::int64_t w, std::uint64_t m) {
    if (w < weight || (w == weight && m < mask)) {
      weight = w;
      mask = m;
    }
  }
};

// Gray codes g(t) = t ^ (t >> 1) for t in [lo, hi). Bulk position j sits at bit b-1-j.
Best scan(const Prepared& prep, int b, std::uint64_t lo, std::uint64_t hi) {
  std::vector<int> in(prep.base_in);
  std::uint64_t g = lo ^ (lo >> 1);
  for (int j = 0; j < b; ++j)
    if (g >> (b - 1 - j) & 1)
      for (int e : prep.incidence[j]) ++in[e];
  std::int64_t w = prep.constant;
  for (std::size_t e = 0; e < in.size(); ++e)
    if (in[e] > 0 && in[e] < prep.size[e]) w += prep.weight[e];

  Best best;
  best.offer(w, g);
  for (std::uint64_t t = lo + 1; t < hi; ++t) {
    const int bit = std::countr_zero(t);
    const int j = b - 1 - bit;
    const bool entering = !(g >> bit & 1);
    g ^= std::uint64_t{1} << bit;
    for (int e : prep.incidence[j]) {
      const bool was_cut = in[e] > 0 && in[e] < prep.size[e];
      in[e] += entering ? 1 : -1;
      const bool now_cut = in[e] > 0 && in[e] < prep.size[e];
      if (was_cut != now_cut) w += now_cut ? prep.weight[e] : -prep.weight[e];
    }
    best.offer(w, g);
  }
  return best;
}

}  // namespace

MinCutResult min_cut_gray(const Hypergraph& graph, SubsystemLabel subsystem, int bulk_limit, int threads) {
  check_subsystem(graph.parties(), subsystem);
  const auto& bulk = graph.bulk_vertices();
  const int b = static_cast<int>(bulk.size());
  if (b > bulk_limit) throw ResourceError(std::to_string(b) + " bulk vertices exceed the limit of " + std::to_string(bulk_limit));
  if (b > 62) throw ResourceError("bulk vertex count beyond 62 is not enumerable");

  Prepared prep;
  if (!prepare(graph, subsystem, prep)) return min_cut_serial(graph, subsystem, bulk_limit);

  const std::uint64_t total = std::uint64_t{1} << b;
  // Small ranges are not worth a parallel region.
  const int workers = (b < 14) ? 1 : std::max(1, threads);
  const std::uint64_t chunks = workers == 1 ? 1 : std::min<std::uint64_t>(total, std::uint64_t(workers) * 8);
  std::vector<Best> partial(chunks);

#pragma omp parallel for num_threads(workers) schedule(dynamic) if (workers > 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
    const std::uint64_t hi = lo + total / chunks + (static_cast<std::uint64_t>(c) < total % chunks ? 1 : 0);
    partial[c] = scan(prep, b, lo, hi);
  }

  Best best;
  for (const auto& p : partial) best.offer(p.weight, p.mask);

  MinCutResult result{Rational(mpz_class(best.weight), prep.denominator), {}};
  result.entropy.canonicalize();
  for (int p = 0; p < graph.parties(); ++p)
    if (subsystem.mask & (PartyMask{1} << p)) result.cut.included.push_back(graph.boundary_vertex(p));
  for (int j = 0; j < b; ++j)
    if (best.mask >> (b - 1 - j) & 1) result.cut.included.push_back(bulk[j]);
  std::sort(result.cut.included.begin(), result.cut.included.end());
  return result;
}

}  // namespace hypercone::kernels
