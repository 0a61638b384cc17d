#include "doctest.h"

#include <sstream>

#include "hypercone/errors.hpp"
#include "hypercone/graph_io.hpp"
#include "hypercone/hypergraph.hpp"
#include "hypercone/rational.hpp"
#include "hypercone/subsystem.hpp"
#include "support/oracles.hpp"

using namespace hypercone;

namespace {

Hypergraph ghz3() { return Hypergraph(2, {"A", "B", "O"}, {0, 1, 2}, {{{0, 1, 2}, 1}}); }

// Bulk s joined to A, B, C, O by unit 2-edges.
Hypergraph star4() {
  return Hypergraph(3, {"A", "B", "C", "O", "s"}, {0, 1, 2, 3}, {{{4, 0}, 1}, {{4, 1}, 1}, {{4, 2}, 1}, {{4, 3}, 1}});
}

Hypergraph clr5() {
  return Hypergraph(5, {"A", "B", "C", "D", "E", "O", "s"}, {0, 1, 2, 3, 4, 5},
                    {{{2, 3, 4, 5, 6}, 1}, {{6, 1, 5}, 1}, {{6, 0}, 1}});
}

SubsystemLabel L(int n, const char* s) { return parse_subsystem(n, s); }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("canonical subsystem order is graded lexicographic") {
  const auto& subs = canonical_subsystems(3);
  std::vector<std::string> names;
  for (auto s : subs) names.push_back(subsystem_name(3, s));
  CHECK(names == std::vector<std::string>{"A", "B", "C", "AB", "AC", "BC", "ABC"});
  CHECK(canonical_subsystems(5).size() == 31);
  CHECK(subsystem_name(5, canonical_subsystems(5)[5]) == "AB");
  CHECK(subsystem_name(5, canonical_subsystems(5).back()) == "ABCDE");
  CHECK(party_label(6, 0) == "P1");
  CHECK(party_label(6, 6) == "O");
  CHECK(party_index(3, "O") == 3);
  CHECK_THROWS_AS(parse_subsystem(3, "AD"), InputError);
  CHECK_THROWS_AS(check_party_count(0), InputError);
  for (std::size_t i = 0; i < subs.size(); ++i) CHECK(canonical_index(3, subs[i]) == i);
}

TEST_CASE("cut_weight examples") {
  const Hypergraph g = ghz3();
  CHECK(cut_weight(g, make_cut(g, {"A"})) == 1);
  CHECK(cut_weight(g, make_cut(g, {"A", "B", "O"})) == 0);
  const Hypergraph s = star4();
  CHECK(cut_weight(s, make_cut(s, {"A", "s"})) == 3);
  CHECK_THROWS_AS(make_cut(g, {"Z"}), InputError);
}

TEST_CASE("min_cut_entropy examples") {
  CHECK(min_cut_entropy(ghz3(), L(2, "A")).entropy == 1);
  CHECK(min_cut_entropy(star4(), L(3, "AB")).entropy == 2);
  const Hypergraph zero(2, {"A", "B", "O"}, {0, 1, 2}, {{{0, 1}, 0}});
  for (auto s : canonical_subsystems(2)) CHECK(min_cut_entropy(zero, s).entropy == 0);
  CHECK_THROWS_AS(min_cut_entropy(ghz3(), SubsystemLabel{0}), InputError);
  CHECK_THROWS_AS(min_cut_entropy(star4(), L(3, "A"), {0, 1}), ResourceError);
}

TEST_CASE("min-cut witness is a minimal cut containing exactly the subsystem") {
  const Hypergraph g = clr5();
  for (auto s : canonical_subsystems(5)) {
    const MinCutResult r = min_cut_entropy(g, s);
    CHECK(cut_weight(g, r.cut) == r.entropy);
    for (int p = 0; p <= 5; ++p) {
      const bool in = std::count(r.cut.included.begin(), r.cut.included.end(), g.boundary_vertex(p)) > 0;
      CHECK(in == (p < 5 && (s.mask >> p & 1)));
    }
  }
}

TEST_CASE("entropy_vector examples") {
  const Hypergraph ghz4(3, {"A", "B", "C", "O"}, {0, 1, 2, 3}, {{{0, 1, 2, 3}, 1}});
  const EntropyVector s4 = entropy_vector(ghz4);
  for (std::size_t i = 0; i < s4.size(); ++i) CHECK(s4[i] == 1);

  const Hypergraph bell(2, {"A", "B", "O"}, {0, 1, 2}, {{{0, 2}, 1}});
  const EntropyVector sb = entropy_vector(bell);
  CHECK(sb[L(2, "A")] == 1);
  CHECK(sb[L(2, "B")] == 0);
  CHECK(sb[L(2, "AB")] == 1);

  // Brute force over all 2^7 vertex subsets.
  CHECK(entropy_vector(clr5()) == oracle::entropy_vector(clr5()));
}

TEST_CASE("expand_to_unit_weights examples") {
  const Hypergraph g(1, {"A", "O"}, {0, 1}, {{{0, 1}, Rational(3, 2)}});
  const UnitExpansion u = expand_to_unit_weights(g);
  CHECK(u.scale == 2);
  CHECK(u.graph.edges().size() == 3);
  for (const auto& e : u.graph.edges()) CHECK(e.weight == 1);

  const UnitExpansion id = expand_to_unit_weights(ghz3());
  CHECK(id.scale == 1);
  CHECK(id.graph.edges().size() == 1);

  const Hypergraph mixed(2, {"A", "B", "O"}, {0, 1, 2}, {{{0, 1}, Rational(1, 3)}, {{1, 2}, Rational(1, 2)}});
  const UnitExpansion m = expand_to_unit_weights(mixed);
  CHECK(m.scale == 6);
  CHECK(m.graph.edges().size() == 5);
  const EntropyVector before = oracle::entropy_vector(mixed), after = oracle::entropy_vector(m.graph);
  CHECK(after == Rational(6) * before);
  CHECK_THROWS_AS(expand_to_unit_weights(Hypergraph(1, {"A", "O"}, {0, 1}, {{{0, 1}, 1000}}), 10), ResourceError);
}

TEST_CASE("universal_reduction examples") {
  const Hypergraph r = universal_reduction(ghz3());
  CHECK(entropy_vector(r) == entropy_vector(ghz3()));
  const Hypergraph s = universal_reduction(star4());
  CHECK(entropy_vector(s) == entropy_vector(star4()));
  CHECK_THROWS_AS(universal_reduction(clr5()), ResourceError);
}

TEST_CASE("disjoint union merges boundary vertices and renames bulk") {
  const Hypergraph u = disjoint_union(star4(), star4());
  CHECK(u.vertex_count() == 6);
  CHECK(entropy_vector(u) == Rational(2) * entropy_vector(star4()));
}

TEST_CASE("scale_weights") {
  CHECK(entropy_vector(scale_weights(clr5(), Rational(5, 3))) == Rational(5, 3) * entropy_vector(clr5()));
  CHECK_THROWS_AS(scale_weights(clr5(), Rational(-1)), InputError);
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph(1, {"A", "O"}, {0, 1}, {{{0}, 1}}), InputError);
  CHECK_THROWS_AS(Hypergraph(1, {"A", "O"}, {0, 1}, {{{0, 0}, 1}}), InputError);
  CHECK_THROWS_AS(Hypergraph(1, {"A", "O"}, {0, 1}, {{{0, 1}, -1}}), InputError);
  CHECK_THROWS_AS(Hypergraph(1, {"A", "A"}, {0, 1}, {}), InputError);
  CHECK_THROWS_AS(Hypergraph(1, {"A", "O"}, {0, 0}, {}), InputError);
  CHECK(ghz3().rank() == 3);
}

TEST_CASE("graph JSON round trip and boundary merges") {
  const nlohmann::json doc = nlohmann::json::parse(R"({
    "n": 2, "vertices": ["A", "A2", "B", "O", "s"],
    "boundary": {"A": ["A", "A2"], "B": "B", "O": "O"},
    "edges": [{"v": ["A", "s"], "w": "3/2"}, {"v": ["A2", "s", "B"], "w": 0.5}, {"v": ["A", "A2"], "w": "1"},
              {"v": ["s", "O"], "w": 2}]})");
  const LoadedGraph loaded = graph_from_json(doc);
  CHECK(loaded.merges.size() == 1);
  CHECK(loaded.dropped_edges == 1);
  CHECK(loaded.graph.vertex_count() == 4);
  const LoadedGraph again = graph_from_json(graph_to_json(loaded.graph));
  CHECK(entropy_vector(again.graph) == entropy_vector(loaded.graph));
  CHECK(entropy_vector(loaded.graph)[parse_subsystem(2, "A")] == 2);

  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":1,"vertices":["A","O"],"boundary":{"A":"A"},"edges":[]})")),
                  InputError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(
                      R"({"n":1,"vertices":["A","O"],"boundary":{"A":"A","O":"O"},"edges":[{"v":["A"],"w":"1"}]})")),
                  InputError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(
                      R"({"n":1,"vertices":["A","O"],"boundary":{"A":"A","O":"O"},"edges":[{"v":["A","Q"],"w":"1"}]})")),
                  InputError);
}
