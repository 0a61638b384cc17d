#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "hypercone/catalog.hpp"
#include "hypercone/errors.hpp"
#include "hypercone/graph_io.hpp"
#include "hypercone/library.hpp"
#include "support/oracles.hpp"

using namespace hypercone;

namespace {

EntropyVector ones(int n) {
  EntropyVector v(n);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1;
  return v;
}

std::vector<NamedQ> lifted(const char* name, int n) {
  const LibraryEntry* e = find_builtin(name);
  return instances(e->name, e->q, n);
}

}  // namespace

TEST_CASE("builtin_rays examples") {
  const RayEntry* ghz4 = find_ray("GHZ4");
  REQUIRE(ghz4);
  CHECK(ghz4->n == 3);
  CHECK(*ghz4->expected == ones(3));

  const RayEntry* bell = find_ray("Bell_AO");
  const EntropyVector s = *bell->expected;
  CHECK(s[parse_subsystem(2, "A")] == 1);
  CHECK(s[parse_subsystem(2, "B")] == 0);
  CHECK(s[parse_subsystem(2, "AB")] == 1);
  CHECK(find_ray("nope") == nullptr);
}

TEST_CASE("every shipped ray matches its vector and brute force") {
  for (const RayEntry& r : builtin_rays()) {
    CAPTURE(r.name);
    CHECK(entropy_vector(r.graph) == *r.expected);
    if (r.graph.vertex_count() <= 14) CHECK(oracle::entropy_vector(r.graph) == *r.expected);
  }
}

TEST_CASE("catalog vectors obey the built-in inequalities") {
  for (const RayEntry& r : builtin_rays()) {
    for (const LibraryEntry& e : builtin_library()) {
      if (e.q.parties() > r.n) continue;
      if (e.name == "MMI") continue;  // hypergraphs may violate MMI
      for (const NamedQ& q : instances(e.name, e.q, r.n)) {
        CAPTURE(r.name);
        CAPTURE(q.name);
        CHECK(evaluate(q.q, *r.expected) >= 0);
      }
    }
  }
}

TEST_CASE("is_realization examples") {
  const Hypergraph& ghz4 = find_ray("GHZ4")->graph;
  CHECK(is_realization(ghz4, ones(3)) == Rational(1));
  CHECK(is_realization(scale_weights(ghz4, 2), ones(3)) == Rational(2));
  CHECK_FALSE(is_realization(find_ray("Star4")->graph, ones(3)).has_value());
  const Hypergraph& clr = find_ray("CLR5")->graph;
  const EntropyVector v = *find_ray("CLR5")->expected;
  for (const Rational c : {Rational(1, 3), Rational(5, 2)})
    CHECK(is_realization(scale_weights(clr, c), v) == Rational(c * *is_realization(clr, v)));
}

TEST_CASE("saturated_facets examples") {
  const auto ghz = saturated_facets(ones(3), lifted("SA", 3));
  for (const FacetStatus& f : ghz) {
    CHECK_FALSE(f.violated);
    CHECK(f.value >= 0);
  }
  const auto mmi = saturated_facets(ones(3), lifted("MMI", 3));
  REQUIRE(mmi.size() == 1);
  CHECK(mmi[0].violated);
  CHECK(mmi[0].value == -1);

  const EntropyVector bell = *find_ray("Bell_AB")->expected;
  // S(A)+S(B)-S(AB) = 2 for a Bell pair; the two purified instances are tight.
  int tight = 0;
  for (const FacetStatus& f : saturated_facets(bell, lifted("SA", 2))) {
    if (f.name == "SA[A,B|O]") CHECK(f.value == 2);
    tight += f.saturated;
  }
  CHECK(tight == 2);

  for (const FacetStatus& f : saturated_facets(EntropyVector(3), lifted("SSA", 3))) CHECK(f.saturated);
}

TEST_CASE("instances lift inequalities to more parties") {
  const auto sa2 = lifted("SA", 2);
  // S(A)+S(B)>=S(AB) and its purifications S(A)+S(AB)>=S(B), S(B)+S(AB)>=S(A)
  CHECK(sa2.size() == 3);
  for (const NamedQ& q : lifted("SSA", 4)) CHECK(q.q.parties() == 4);
  const auto mmi4 = lifted("MMI", 4);
  CHECK(!mmi4.empty());
  for (std::size_t i = 0; i < mmi4.size(); ++i)
    for (std::size_t j = i + 1; j < mmi4.size(); ++j) CHECK_FALSE(mmi4[i].q == mmi4[j].q);
  CHECK(lifted("Ingleton", 3).empty());
}

TEST_CASE("load_rays reads external data and reports the bulk census") {
  const std::string path = "hypercone_test_rays.json";
  nlohmann::json doc;
  doc["rays"] = nlohmann::json::array();
  for (const char* name : {"GHZ6", "Star6", "R8", "CLR5"}) {
    const RayEntry* r = find_ray(name);
    nlohmann::json entry{{"name", r->name}, {"graph", graph_to_json(r->graph)}};
    nlohmann::json v = nlohmann::json::array();
    for (std::size_t i = 0; i < r->expected->size(); ++i) v.push_back(to_string((*r->expected)[i]));
    entry["expected"] = v;
    doc["rays"].push_back(entry);
  }
  std::ofstream(path) << doc.dump();
  const LoadedRays loaded = load_rays(path);
  std::remove(path.c_str());
  CHECK(loaded.rays.size() == 4);
  CHECK(loaded.bulk_census.at(0) == 1);
  CHECK(loaded.bulk_census.at(1) == 2);
  CHECK(loaded.bulk_census.at(2) == 1);
  for (const RayEntry& r : loaded.rays) CHECK(is_realization(r.graph, *r.expected) == Rational(1));
  CHECK_THROWS_AS(load_rays("does-not-exist.json"), InputError);
}
