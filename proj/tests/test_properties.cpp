#include "doctest.h"

#include <algorithm>
#include <complex>

#include "hypercone/catalog.hpp"
#include "hypercone/contraction.hpp"
#include "hypercone/errors.hpp"
#include "hypercone/kernels.hpp"
#include "hypercone/library.hpp"
#include "hypercone/states.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hypercone;

namespace {

constexpr int kGraphs = 600;

std::uint32_t complement(int n, std::uint32_t mask) { return ((1u << (n + 1)) - 1) & ~mask; }

std::vector<NamedQ> lifted(const char* name, int n) {
  const LibraryEntry* e = find_builtin(name);
  return instances(e->name, e->q, n);
}

}  // namespace

TEST_CASE("property: min-cut equals brute force; serial and Gray kernels agree") {
  gen::Rng rng(11);
  for (int i = 0; i < kGraphs; ++i) {
    const int n = gen::uniform(rng, 1, 4);
    const Hypergraph g = gen::graph(rng, n);
    CAPTURE(i);
    for (auto s : canonical_subsystems(n)) {
      const Rational expected = oracle::min_cut(g, s.mask);
      const MinCutResult serial = kernels::min_cut_serial(g, s, 24);
      CHECK(serial.entropy == expected);
      for (int threads : {1, 3}) {
        const MinCutResult gray = kernels::min_cut_gray(g, s, 24, threads);
        CHECK(gray.entropy == expected);
        CHECK(gray.cut == serial.cut);
      }
      CHECK(cut_weight(g, serial.cut) == expected);
    }
  }
}

TEST_CASE("property: SA, SSA and Ingleton hold on random four-party hypergraphs") {
  gen::Rng rng(12);
  std::vector<NamedQ> checks;
  for (const char* name : {"SA", "SSA", "Ingleton"})
    for (auto& q : lifted(name, 4)) checks.push_back(q);
  int graphs = 0;
  for (int i = 0; i < kGraphs; ++i) {
    const Hypergraph g = gen::graph(rng, 4);
    const EntropyVector s = entropy_vector(g);
    ++graphs;
    for (const NamedQ& q : checks) {
      const Rational v = evaluate(q.q, s);
      if (v < 0) {
        CAPTURE(i);
        CAPTURE(q.name);
        CHECK(v >= 0);
      }
    }
  }
  CHECK(graphs >= 500);
}

TEST_CASE("property: purification and cut symmetry") {
  gen::Rng rng(13);
  for (int i = 0; i < kGraphs; ++i) {
    const int n = gen::uniform(rng, 1, 4);
    const Hypergraph g = gen::graph(rng, n);
    const EntropyVector s = entropy_vector(g);
    for (auto sub : canonical_subsystems(n)) CHECK(s[sub] == oracle::min_cut(g, complement(n, sub.mask)));
    const std::uint64_t all = (std::uint64_t{1} << g.vertex_count()) - 1;
    const std::uint64_t w = std::uniform_int_distribution<std::uint64_t>(0, all)(rng);
    Cut cut, rest;
    for (int v = 0; v < g.vertex_count(); ++v) (w >> v & 1 ? cut : rest).included.push_back(v);
    CHECK(cut_weight(g, cut) == cut_weight(g, rest));
    CHECK(cut_weight(g, cut) == oracle::cut_weight(g, w));
  }
}

TEST_CASE("property: scaling multiplies entropies and keeps the minimal cuts") {
  gen::Rng rng(14);
  for (int i = 0; i < kGraphs; ++i) {
    const int n = gen::uniform(rng, 1, 4);
    const Hypergraph g = gen::graph(rng, n);
    Rational c(gen::uniform(rng, 1, 9), gen::uniform(rng, 1, 5));
    c.canonicalize();
    const Hypergraph scaled = scale_weights(g, c);
    CHECK(entropy_vector(scaled) == c * entropy_vector(g));
    for (auto sub : canonical_subsystems(n)) CHECK(min_cut_entropy(scaled, sub).cut == min_cut_entropy(g, sub).cut);
    CHECK(entropy_vector(scale_weights(g, 0)).is_zero());
  }
}

TEST_CASE("property: additivity over disjoint unions") {
  gen::Rng rng(15);
  for (int i = 0; i < kGraphs / 2; ++i) {
    const int n = gen::uniform(rng, 1, 4);
    const Hypergraph a = gen::graph(rng, n, 2), b = gen::graph(rng, n, 2);
    CHECK(entropy_vector(disjoint_union(a, b)) == entropy_vector(a) + entropy_vector(b));
  }
}

TEST_CASE("property: unit expansion and universal reduction preserve entropies") {
  gen::Rng rng(16);
  for (int i = 0; i < kGraphs; ++i) {
    const int n = gen::uniform(rng, 1, 4);
    const Hypergraph g = gen::graph(rng, n);
    const EntropyVector s = oracle::entropy_vector(g);
    const UnitExpansion u = expand_to_unit_weights(g);
    for (const Hyperedge& e : u.graph.edges()) CHECK(e.weight == 1);
    CHECK(entropy_vector(u.graph) == Rational(u.scale) * s);
    if (n <= 3) {
      const Hypergraph r = universal_reduction(g);
      CHECK(oracle::entropy_vector(r) == s);
    }
  }
}

TEST_CASE("property: linearity of evaluate and Q-vector round trips") {
  gen::Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const int n = gen::uniform(rng, 2, 5);
    const QVector q = gen::qvector(rng, n);
    const Inequality ineq = q_to_terms(q);
    CHECK(terms_to_q(ineq) == q);
    CHECK(q_to_terms(terms_to_q(ineq)) == ineq);
    CHECK(parse_inequality(format_inequality(ineq), n) == ineq);
    for (int p = 0; p < n; ++p) CHECK(purify(purify(ineq, p), p) == ineq);
    if (n <= 4) {
      const EntropyVector s1 = entropy_vector(gen::graph(rng, n)), s2 = entropy_vector(gen::graph(rng, n));
      CHECK(evaluate(q, s1 + s2) == evaluate(q, s1) + evaluate(q, s2));
    }
  }
}

TEST_CASE("property: weighted indicator") {
  gen::Rng rng(18);
  for (int i = 0; i < 2000; ++i) {
    const int width = gen::uniform(rng, 1, 8);
    const int k = gen::uniform(rng, 2, 6);
    std::vector<Rational> w;
    for (int c = 0; c < width; ++c) w.push_back(gen::weight(rng));
    std::vector<BitString> s;
    std::vector<std::uint64_t> raw;
    for (int j = 0; j < k; ++j) {
      raw.push_back(std::uniform_int_distribution<std::uint64_t>(0, (1u << width) - 1)(rng));
      s.push_back({width, raw.back()});
    }
    const Rational value = weighted_indicator(s, w);
    CHECK(value == oracle::indicator_sum(raw, width, w));
    std::shuffle(s.begin(), s.end(), rng);
    CHECK(weighted_indicator(s, w) == value);
    std::vector<BitString> more = s;
    more.push_back({width, std::uniform_int_distribution<std::uint64_t>(0, (1u << width) - 1)(rng)});
    CHECK(weighted_indicator(more, w) >= value);
    const std::vector<BitString> pair{s[0], s[1]};
    Rational hamming = 0;
    for (int c = 0; c < width; ++c)
      if ((s[0].bits ^ s[1].bits) >> (width - 1 - c) & 1) hamming += w[c];
    CHECK(weighted_indicator(pair, w) == hamming);

    bool spans = true;
    for (int drop = 0; drop < k; ++drop) {
      std::vector<BitString> sub;
      for (int j = 0; j < k; ++j)
        if (j != drop) sub.push_back(s[j]);
      if (sub.size() >= 2 && !(value > weighted_indicator(sub, w))) spans = false;
      if (sub.size() == 1 && !(value > 0)) spans = false;
    }
    CHECK(spans_full_polytope(s, w) == spans);
  }
}

TEST_CASE("property: f10 round trip") {
  gen::Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    const int L = gen::uniform(rng, 1, 8), Rp = gen::uniform(rng, 1, 12);
    std::vector<std::uint64_t> values(std::size_t{1} << L);
    for (auto& v : values) v = std::uniform_int_distribution<std::uint64_t>(0, (1u << Rp) - 1)(rng);
    CHECK(encode_f10(decode_f10(values, L, Rp)) == values);
  }
}

TEST_CASE("property: tuple kernels, pruning and the brute-force oracle agree") {
  gen::Rng rng(20);
  std::vector<NamedQ> pool;
  for (const char* name : {"SA", "SSA", "MMI"})
    for (auto& q : lifted(name, 4)) pool.push_back(q);
  for (auto& q : lifted("Ingleton", 4)) pool.push_back(q);

  int compared = 0, polytope_pruned = 0;
  for (int i = 0; i < 120; ++i) {
    const NamedQ& pick = pool[gen::uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
    const Inequality ineq = q_to_terms(pick.q);
    const ExpandedInequality ex = expand_rhs(ineq);
    if (ex.L() > 5) continue;
    const OccurrenceVectors occ = occurrence_vectors(ex);
    ContractionMap f;
    if (i % 2 == 0) {
      const SearchResult found = search_contraction(ineq, {.k_target = 2});
      if (found.outcome != SearchOutcome::found) continue;
      f = *found.map;
      // perturb one free point
      const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(0, f.images.size() - 1)(rng);
      if (std::find(occ.x.begin(), occ.x.end(), x) == occ.x.end() && gen::uniform(rng, 0, 1))
        f.images[x] = std::uniform_int_distribution<std::uint64_t>(0, (1u << f.Rp) - 1)(rng);
    } else {
      f = gen::map(rng, occ);
    }
    std::vector<Rational> weights;
    for (const Term& t : ex.lhs) weights.push_back(t.coefficient);
    const kernels::TupleProblem problem = kernels::make_tuple_problem(f.images, f.L, f.Rp, weights);

    bool lower_verified = true;
    for (int k = 2; k <= 4; ++k) {
      CAPTURE(pick.name);
      CAPTURE(k);
      const oracle::TupleVerdict truth = oracle::check_rank(f, ineq, k);
      kernels::TupleFlags plain{false, false, ~0ULL};
      kernels::TupleFlags pruned{true, lower_verified && k >= 3, ~0ULL};
      const kernels::TupleOutcome a = kernels::verify_rank_serial(problem, k, plain);
      const kernels::TupleOutcome b = kernels::verify_rank_serial(problem, k, pruned);
      polytope_pruned += b.degenerate > 0;
      for (const auto& out : {a, b}) {
        CHECK((out.status == kernels::TupleStatus::violated) == truth.violated);
        if (truth.violated) CHECK(out.witness == truth.tuple);
      }
      for (int threads : {1, 2, 4}) {
        const kernels::TupleOutcome p = kernels::verify_rank_parallel(problem, k, pruned, threads);
        CHECK(p.status == b.status);
        CHECK(p.witness == b.witness);
        CHECK(p.examined == b.examined);
        CHECK(p.pruned == b.pruned);
        CHECK(p.nodes == b.nodes);
      }
      ++compared;
      lower_verified = lower_verified && !truth.violated;
    }
  }
  CHECK(compared > 100);
  CHECK(polytope_pruned > 0);
}

TEST_CASE("property: verification is independent of the worker count") {
  for (const char* name : {"MMI", "Ingleton", "Q2"}) {
    const LibraryEntry* e = find_builtin(name);
    const Inequality ineq = q_to_terms(e->q);
    const int k_max = std::min(5, static_cast<int>(ineq.beta_total().get_num().get_si()));
    const ContractionReport one = verify_contraction(*e->map, ineq, {.k_max = k_max, .threads = 1});
    for (int threads : {2, 4}) {
      const ContractionReport many = verify_contraction(*e->map, ineq, {.k_max = k_max, .threads = threads});
      REQUIRE(many.ranks.size() == one.ranks.size());
      for (std::size_t r = 0; r < one.ranks.size(); ++r) {
        CHECK(many.ranks[r].status == one.ranks[r].status);
        CHECK(many.ranks[r].examined == one.ranks[r].examined);
        CHECK(many.ranks[r].pruned == one.ranks[r].pruned);
        CHECK(many.ranks[r].witness.has_value() == one.ranks[r].witness.has_value());
      }
    }
  }
}

TEST_CASE("property: random qubit states are normalized, pure and match the dense oracle") {
  gen::Rng rng(21);
  int built = 0;
  for (int i = 0; i < 150; ++i) {
    const int n = gen::uniform(rng, 1, 3);
    const Hypergraph g = gen::qubit_graph(rng, n);
    PartyState s;
    try {
      s = build_state(g);
    } catch (const InputError&) {
      continue;  // the contraction vanished for this choice of tensors
    }
    ++built;
    mpz_class total = 0;
    for (const Eisenstein& a : s.amplitudes) total += norm(a);
    CHECK(total == s.N);
    for (auto sub : canonical_subsystems(n)) {
      const EntropyValue e = reduced_entropy(s, sub, 2);
      CHECK(e.value == doctest::Approx(oracle::state_entropy(s, sub.mask, 2)).epsilon(1e-9));
      CHECK(e.value == doctest::Approx(oracle::state_entropy(s, complement(n, sub.mask), 2)).epsilon(1e-9));
      CHECK(static_cast<int>(e.rank) == oracle::state_rank(s, sub.mask));
    }
    // Explicit Bell pairs and Hadamards only change local bases.
    const PartyState t = build_state(g, {.explicit_two_edges = true});
    for (auto sub : canonical_subsystems(n))
      CHECK(reduced_entropy(t, sub, 2).value == doctest::Approx(reduced_entropy(s, sub, 2).value).epsilon(1e-9));
  }
  CHECK(built > 50);
}

TEST_CASE("property: explicit two-edge insertion is the identity between boundary vertices") {
  gen::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const int n = gen::uniform(rng, 1, 4);
    std::vector<std::string> names;
    std::vector<int> boundary;
    for (int p = 0; p <= n; ++p) {
      names.push_back(party_label(n, p));
      boundary.push_back(p);
    }
    std::vector<Hyperedge> edges;
    for (int e = gen::uniform(rng, 1, 4); e > 0; --e) {
      const int a = gen::uniform(rng, 0, n), b = (a + gen::uniform(rng, 1, n)) % (n + 1);
      edges.push_back({{a, b}, 1});
    }
    const Hypergraph g(n, names, boundary, edges);
    const PartyState s = build_state(g), t = build_state(g, {.explicit_two_edges = true});
    REQUIRE(s.amplitudes.size() == t.amplitudes.size());
    std::complex<double> overlap = 0;
    double ns = 0, nt = 0;
    for (std::size_t x = 0; x < s.amplitudes.size(); ++x) {
      const auto a = oracle::to_complex(s.amplitudes[x]), b = oracle::to_complex(t.amplitudes[x]);
      overlap += std::conj(a) * b;
      ns += std::norm(a);
      nt += std::norm(b);
    }
    CHECK(std::abs(overlap) == doctest::Approx(std::sqrt(ns * nt)).epsilon(1e-12));
  }
}
