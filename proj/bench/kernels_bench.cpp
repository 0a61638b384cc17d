// Serial reference kernels against their parallel counterparts.
//
//   hypercone_bench --benchmark_filter=MinCut
//
// Thread counts are the benchmark argument; 0 means the serial kernel.

#include <benchmark/benchmark.h>

#include <random>

#include "hypercone/kernels.hpp"
#include "hypercone/library.hpp"
#include "hypercone/random_graph.hpp"

using namespace hypercone;

namespace {

const Hypergraph& big_graph() {
  static const Hypergraph g = [] {
    std::mt19937_64 rng(11);
    RandomGraphParams p;
    p.n = 4;
    p.max_bulk = 16;
    p.min_edges = 24;
    p.max_edges = 30;
    for (;;) {
      Hypergraph h = random_hypergraph(rng, p);
      if (h.vertex_count() - h.parties() - 1 >= 14) return h;
    }
  }();
  return g;
}

kernels::TupleProblem problem(const char* name) {
  const LibraryEntry* e = find_builtin(name);
  const Inequality ineq = q_to_terms(e->q);
  std::vector<Rational> weights;
  for (const Term& t : ineq.lhs()) weights.push_back(t.coefficient);
  return kernels::make_tuple_problem(e->map->images, ineq.L(), expand_rhs(ineq).columns(), weights);
}

void MinCut(benchmark::State& state) {
  const Hypergraph& g = big_graph();
  const SubsystemLabel ab{0b0011};
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MinCutResult r = threads == 0 ? kernels::min_cut_serial(g, ab) : kernels::min_cut_gray(g, ab, 24, threads);
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(threads == 0 ? "serial" : "gray");
}
BENCHMARK(MinCut)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void TupleRank(benchmark::State& state, const char* name, int k) {
  const kernels::TupleProblem p = problem(name);
  const int threads = static_cast<int>(state.range(0));
  kernels::TupleOutcome out;
  for (auto _ : state) {
    out = threads == 0 ? kernels::verify_rank_serial(p, k, {}) : kernels::verify_rank_parallel(p, k, {}, threads);
    benchmark::DoNotOptimize(out);
  }
  state.counters["examined"] = static_cast<double>(out.examined);
  state.SetLabel(threads == 0 ? "serial" : "parallel");
}
BENCHMARK_CAPTURE(TupleRank, Ingleton_k5, "Ingleton", 5)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(TupleRank, Q1_k4, "Q1", 4)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
