#include "hypercone/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hypercone/errors.hpp"
#include "hypercone/graph_io.hpp"

namespace hypercone {

namespace {

struct Spec {
  std::string name;
  int n;
  std::vector<std::string> bulk;
  std::vector<std::vector<std::string>> edges;
  std::string provenance;
};

Hypergraph graph_from(const Spec& spec) {
  std::vector<std::string> names;
  std::vector<int> boundary;
  for (int p = 0; p <= spec.n; ++p) {
    boundary.push_back(static_cast<int>(names.size()));
    names.push_back(party_label(spec.n, p));
  }
  names.insert(names.end(), spec.bulk.begin(), spec.bulk.end());
  std::vector<Hyperedge> edges;
  for (const auto& members : spec.edges) {
    Hyperedge e{{}, Rational(1)};
    for (const auto& m : members) e.members.push_back(static_cast<int>(std::find(names.begin(), names.end(), m) - names.begin()));
    edges.push_back(std::move(e));
  }
  return Hypergraph(spec.n, std::move(names), std::move(boundary), std::move(edges));
}

std::vector<RayEntry> build() {
  std::vector<Spec> specs;
  specs.push_back({"Bell_AO", 2, {}, {{"A", "O"}}, "single 2-edge A-O; B isolated"});
  specs.push_back({"Bell_AB", 2, {}, {{"A", "B"}}, "single 2-edge A-B"});
  for (int k = 3; k <= 6; ++k) {
    const int n = k - 1;
    std::vector<std::string> all;
    for (int p = 0; p <= n; ++p) all.push_back(party_label(n, p));
    specs.push_back({"GHZ" + std::to_string(k), n, {}, {all}, "single " + std::to_string(k) + "-edge"});
    std::vector<std::vector<std::string>> legs;
    for (const auto& p : all) legs.push_back({"s", p});
    specs.push_back({"Star" + std::to_string(k), n, {"s"}, legs, "one bulk vertex with unit 2-edges to every party"});
  }
  specs.push_back({"R8", 5, {"s1", "s2"},
                   {{"O", "s1"}, {"A", "s1"}, {"B", "s1"}, {"C", "s2"}, {"D", "s2"}, {"E", "s2"}, {"s1", "s2"}},
                   "two degree-4 bulk vertices joined by a 2-edge"});
  specs.push_back({"R12", 5, {"c", "s1", "s2", "s3", "s4"},
                   {{"c", "s1"}, {"c", "s2"}, {"c", "s3"}, {"c", "s4"},
                    {"s1", "A"}, {"s1", "B"}, {"s1", "C"},
                    {"s2", "D"}, {"s2", "E"}, {"s2", "O"},
                    {"s3", "A"}, {"s3", "B"}, {"s3", "C"},
                    {"s4", "D"}, {"s4", "E"}, {"s4", "O"}},
                   "central bulk vertex feeding four degree-4 bulk vertices"});
  specs.push_back({"CLR5", 5, {"s"}, {{"C", "D", "E", "O", "s"}, {"s", "B", "O"}, {"s", "A"}},
                   "one bulk vertex, a 5-edge, a 3-edge and a 2-edge"});

  std::vector<RayEntry> out;
  for (const auto& spec : specs) {
    Hypergraph g = graph_from(spec);
    EntropyVector v = entropy_vector(g);
    out.push_back(RayEntry{spec.name, spec.n, std::move(g), std::move(v), spec.provenance});
  }
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

const std::vector<RayEntry>& builtin_rays() {
  static const std::vector<RayEntry> rays = build();
  return rays;
}

const RayEntry* find_ray(std::string_view name) {
  for (const auto& r : builtin_rays())
    if (iequals(r.name, name)) return &r;
  return nullptr;
}

std::optional<Rational> is_realization(const Hypergraph& graph, const EntropyVector& target) {
  if (target.parties() != graph.parties()) throw InputError("target vector has a different party count");
  if (target.is_zero()) throw InputError("zero target vector");
  const EntropyVector s = entropy_vector(graph);
  std::optional<Rational> scale;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (target[i] == 0) {
      if (s[i] != 0) return std::nullopt;
      continue;
    }
    const Rational c = s[i] / target[i];
    if (!scale) scale = c;
    if (c != *scale) return std::nullopt;
  }
  if (!scale || *scale <= 0) return std::nullopt;
  return scale;
}

std::vector<FacetStatus> saturated_facets(const EntropyVector& s, const std::vector<NamedQ>& library) {
  std::vector<FacetStatus> out;
  for (const auto& entry : library) {
    FacetStatus f{entry.name, evaluate(entry.q, s)};
    f.saturated = f.value == 0;
    f.violated = f.value < 0;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<NamedQ> instances(const std::string& name, const QVector& q, int n) {
  const int k = q.parties();
  check_party_count(n);
  if (n < k) return {};
  const auto& source = canonical_subsystems(k);
  std::vector<int> assign(n + 1, 0);
  std::set<std::vector<Rational>> seen;
  std::vector<NamedQ> out;
  const PartyMask all = (PartyMask{1} << (n + 1)) - 1;
  while (true) {
    // assign[t] = source party of target party t; must hit all k + 1 sources.
    PartyMask hit = 0;
    for (int a : assign) hit |= PartyMask{1} << a;
    if (hit == (PartyMask{1} << (k + 1)) - 1) {
      QVector lifted(n);
      for (std::size_t i = 0; i < source.size(); ++i) {
        if (q[i] == 0) continue;
        PartyMask target = 0;
        for (int t = 0; t <= n; ++t)
          if (source[i].mask >> assign[t] & 1) target |= PartyMask{1} << t;
        if (target >> n & 1) target = all & ~target;
        lifted[SubsystemLabel{target}] += q[i];
      }
      if (!lifted.is_zero() && seen.insert(lifted.entries()).second) {
        std::string label = name + "[";
        for (int src = 0; src <= k; ++src) {
          if (src == k) label += "|";
          else if (src) label += ",";
          for (int t = 0; t <= n; ++t)
            if (assign[t] == src) label += party_label(n, t);
        }
        out.push_back({label + "]", std::move(lifted)});
      }
    }
    int t = n;
    while (t >= 0 && assign[t] == k) assign[t--] = 0;
    if (t < 0) break;
    ++assign[t];
  }
  return out;
}

LoadedRays load_rays(const std::string& path) {
  const auto doc = read_json_file(path);
  LoadedRays out;
  try {
    for (const auto& r : doc.at("rays")) {
      LoadedGraph g = graph_from_json(r.at("graph"));
      RayEntry entry{r.value("name", "ray" + std::to_string(out.rays.size() + 1)), g.graph.parties(), g.graph, {}, path};
      if (r.contains("expected")) {
        std::vector<Rational> values;
        for (const auto& v : r.at("expected")) values.push_back(rational_from_json(v));
        entry.expected = EntropyVector(entry.n, std::move(values));
      }
      ++out.bulk_census[static_cast<int>(entry.graph.bulk_vertices().size())];
      out.rays.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ray file: ") + e.what());
  }
  return out;
}

}  // namespace hypercone
