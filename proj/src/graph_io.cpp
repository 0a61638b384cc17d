#include "hypercone/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "hypercone/errors.hpp"

namespace hypercone {

using nlohmann::json;

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(mpz_class(value.dump()));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float()) return parse_rational(value.dump());
  throw InputError("expected a rational weight, got " + value.dump());
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

LoadedGraph graph_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw InputError("graph document must be an object");
    const int n = doc.at("n").get<int>();
    check_party_count(n);
    std::vector<std::string> names = doc.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t v = 0; v < names.size(); ++v)
      if (!index.emplace(names[v], static_cast<int>(v)).second) throw InputError("duplicate vertex '" + names[v] + "'");
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw InputError("unknown vertex '" + name + "'");
      return it->second;
    };

    const json& bdoc = doc.at("boundary");
    if (!bdoc.is_object()) throw InputError("\"boundary\" must map party labels to vertices");
    std::vector<int> boundary(n + 1, -1);
    std::vector<int> target(names.size());
    for (std::size_t v = 0; v < names.size(); ++v) target[v] = static_cast<int>(v);
    LoadedGraph out;
    for (auto it = bdoc.begin(); it != bdoc.end(); ++it) {
      const int p = party_index(n, it.key());
      if (boundary[p] >= 0) throw InputError("party " + it.key() + " listed twice");
      std::vector<std::string> members =
          it->is_array() ? it->get<std::vector<std::string>>() : std::vector<std::string>{it->get<std::string>()};
      if (members.empty()) throw InputError("party " + it.key() + " has no boundary vertex");
      const int kept = lookup(members.front());
      boundary[p] = kept;
      if (members.size() > 1) {
        BoundaryMerge merge{it.key(), members.front(), {}};
        for (std::size_t i = 1; i < members.size(); ++i) {
          target[lookup(members[i])] = kept;
          merge.merged.push_back(members[i]);
        }
        out.merges.push_back(std::move(merge));
      }
    }
    for (int p = 0; p <= n; ++p)
      if (boundary[p] < 0) throw InputError("party " + party_label(n, p) + " has no boundary vertex");

    // Drop merged vertices and renumber.
    std::vector<int> renumber(names.size(), -1);
    std::vector<std::string> kept_names;
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (target[v] != static_cast<int>(v)) continue;
      renumber[v] = static_cast<int>(kept_names.size());
      kept_names.push_back(names[v]);
    }
    for (auto& b : boundary) b = renumber[b];

    std::vector<Hyperedge> edges;
    for (const auto& edoc : doc.at("edges")) {
      std::vector<std::string> members = edoc.at("v").get<std::vector<std::string>>();
      if (members.size() < 2) throw InputError("hyperedge with fewer than two vertices");
      std::vector<int> raw;
      for (const auto& m : members) raw.push_back(lookup(m));
      std::sort(raw.begin(), raw.end());
      if (std::adjacent_find(raw.begin(), raw.end()) != raw.end()) throw InputError("hyperedge lists a vertex twice");
      Hyperedge e{{}, edoc.contains("w") ? rational_from_json(edoc.at("w")) : Rational(1)};
      for (int v : raw) e.members.push_back(renumber[target[v]]);
      std::sort(e.members.begin(), e.members.end());
      e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
      if (e.members.size() < 2) {
        ++out.dropped_edges;
        continue;
      }
      edges.push_back(std::move(e));
    }
    out.graph = Hypergraph(n, std::move(kept_names), std::move(boundary), std::move(edges));
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph document: ") + e.what());
  }
}

LoadedGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

json graph_to_json(const Hypergraph& graph) {
  const int n = graph.parties();
  json doc;
  doc["n"] = n;
  doc["vertices"] = graph.vertex_names();
  json boundary = json::object();
  for (int p = 0; p <= n; ++p) boundary[party_label(n, p)] = graph.vertex_name(graph.boundary_vertex(p));
  doc["boundary"] = boundary;
  json edges = json::array();
  for (const auto& e : graph.edges()) {
    json members = json::array();
    for (int v : e.members) members.push_back(graph.vertex_name(v));
    edges.push_back({{"v", members}, {"w", to_string(e.weight)}});
  }
  doc["edges"] = edges;
  return doc;
}

json merges_to_json(const std::vector<BoundaryMerge>& merges) {
  json out = json::array();
  for (const auto& m : merges) out.push_back({{"party", m.party}, {"kept", m.kept}, {"merged", m.merged}});
  return out;
}

}  // namespace hypercone
