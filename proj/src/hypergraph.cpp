#include "hypercone/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "hypercone/errors.hpp"
#include "hypercone/kernels.hpp"
#include "hypercone/parallel.hpp"

namespace hypercone {

Hypergraph::Hypergraph(int n, std::vector<std::string> vertex_names, std::vector<int> boundary,
                       std::vector<Hyperedge> edges)
    : n_(n), names_(std::move(vertex_names)), boundary_(std::move(boundary)), edges_(std::move(edges)) {
  check_party_count(n_);
  const int v_count = vertex_count();
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (name.empty()) throw InputError("empty vertex name");
      if (!seen.insert(name).second) throw InputError("duplicate vertex '" + name + "'");
    }
  }
  if (static_cast<int>(boundary_.size()) != n_ + 1)
    throw InputError("boundary must color exactly " + std::to_string(n_ + 1) + " parties");
  party_of_.assign(v_count, -1);
  for (int p = 0; p <= n_; ++p) {
    int v = boundary_[p];
    if (v < 0 || v >= v_count) throw InputError("boundary vertex of party " + party_label(n_, p) + " is not a vertex");
    if (party_of_[v] >= 0)
      throw InputError("vertex '" + names_[v] + "' colors both " + party_label(n_, party_of_[v]) + " and " +
                       party_label(n_, p));
    party_of_[v] = p;
  }
  for (int v = 0; v < v_count; ++v)
    if (party_of_[v] < 0) bulk_.push_back(v);
  for (auto& e : edges_) {
    std::sort(e.members.begin(), e.members.end());
    if (e.members.size() < 2) throw InputError("hyperedge with fewer than two vertices");
    if (std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end())
      throw InputError("hyperedge lists a vertex twice");
    if (e.members.front() < 0 || e.members.back() >= v_count) throw InputError("hyperedge refers to an unknown vertex");
    if (e.weight < 0) throw InputError("negative hyperedge weight " + to_string(e.weight));
  }
}

int Hypergraph::vertex_index(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

int Hypergraph::rank() const {
  int r = 0;
  for (const auto& e : edges_)
    if (e.weight != 0) r = std::max(r, static_cast<int>(e.members.size()));
  return r;
}

Cut make_cut(const Hypergraph& graph, const std::vector<std::string>& names) {
  Cut cut;
  for (const auto& name : names) cut.included.push_back(graph.vertex_index(name));
  std::sort(cut.included.begin(), cut.included.end());
  cut.included.erase(std::unique(cut.included.begin(), cut.included.end()), cut.included.end());
  return cut;
}

Rational cut_weight(const Hypergraph& graph, const Cut& cut) {
  std::vector<char> in(graph.vertex_count(), 0);
  for (int v : cut.included) {
    if (v < 0 || v >= graph.vertex_count()) throw InputError("cut refers to an unknown vertex");
    in[v] = 1;
  }
  Rational total = 0;
  for (const auto& e : graph.edges()) {
    bool any_in = false, any_out = false;
    for (int v : e.members) (in[v] ? any_in : any_out) = true;
    if (any_in && any_out) total += e.weight;
  }
  return total;
}

MinCutResult min_cut_entropy(const Hypergraph& graph, SubsystemLabel subsystem, const MinCutOptions& options) {
  check_subsystem(graph.parties(), subsystem);
  return kernels::min_cut_gray(graph, subsystem, options.bulk_limit, resolve_threads(options.threads));
}

EntropyVector entropy_vector(const Hypergraph& graph, const MinCutOptions& options) {
  const int n = graph.parties();
  EntropyVector out(n);
  const auto& labels = canonical_subsystems(n);
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = min_cut_entropy(graph, labels[i], options).entropy;
  return out;
}

UnitExpansion expand_to_unit_weights(const Hypergraph& graph, std::size_t max_edges) {
  std::vector<Rational> weights;
  for (const auto& e : graph.edges()) weights.push_back(e.weight);
  mpz_class scale = common_denominator(weights);
  std::vector<Hyperedge> edges;
  for (const auto& e : graph.edges()) {
    Rational scaled = e.weight * scale;
    mpz_class copies = scaled.get_num();
    if (copies > static_cast<unsigned long>(max_edges) || edges.size() + copies.get_ui() > max_edges)
      throw ResourceError("unit-weight expansion exceeds " + std::to_string(max_edges) + " edges");
    for (unsigned long c = 0; c < copies.get_ui(); ++c) edges.push_back(Hyperedge{e.members, Rational(1)});
  }
  return {scale, Hypergraph(graph.parties(), graph.vertex_names(), graph.boundary(), std::move(edges))};
}

Hypergraph scale_weights(const Hypergraph& graph, const Rational& factor) {
  if (factor < 0) throw InputError("negative weight scale");
  std::vector<Hyperedge> edges = graph.edges();
  for (auto& e : edges) e.weight *= factor;
  return Hypergraph(graph.parties(), graph.vertex_names(), graph.boundary(), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  if (a.parties() != b.parties()) throw InputError("disjoint union of graphs with different party counts");
  std::vector<std::string> names = a.vertex_names();
  std::set<std::string> taken(names.begin(), names.end());
  std::vector<int> remap(b.vertex_count(), -1);
  for (int p = 0; p <= b.parties(); ++p) remap[b.boundary_vertex(p)] = a.boundary_vertex(p);
  for (int v : b.bulk_vertices()) {
    std::string name = b.vertex_name(v);
    while (taken.count(name)) name += "'";
    taken.insert(name);
    remap[v] = static_cast<int>(names.size());
    names.push_back(name);
  }
  std::vector<Hyperedge> edges = a.edges();
  for (const auto& e : b.edges()) {
    Hyperedge copy{{}, e.weight};
    for (int v : e.members) copy.members.push_back(remap[v]);
    edges.push_back(std::move(copy));
  }
  return Hypergraph(a.parties(), std::move(names), a.boundary(), std::move(edges));
}

Hypergraph universal_reduction(const Hypergraph& graph, const ReductionOptions& options) {
  const int n = graph.parties();
  if (n > options.max_parties)
    throw ResourceError("universal reduction limited to n <= " + std::to_string(options.max_parties));
  const auto& labels = canonical_subsystems(n);
  const int v_count = graph.vertex_count();

  // Membership string of every vertex across the witnessed min-cuts.
  std::vector<std::string> key(v_count, std::string(labels.size(), '0'));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto result = min_cut_entropy(graph, labels[i], options.mincut);
    for (int v : result.cut.included) key[v][i] = '1';
  }

  std::map<std::string, int> cell_of_key;
  std::vector<std::string> names;
  std::vector<int> boundary(n + 1);
  for (int p = 0; p <= n; ++p) {
    const std::string& k = key[graph.boundary_vertex(p)];
    cell_of_key.emplace(k, static_cast<int>(names.size()));
    boundary[p] = static_cast<int>(names.size());
    names.push_back(party_label(n, p));
  }
  std::vector<int> cell(v_count);
  for (int v = 0; v < v_count; ++v) {
    auto [it, inserted] = cell_of_key.emplace(key[v], static_cast<int>(names.size()));
    if (inserted) names.push_back("x" + key[v]);
    cell[v] = it->second;
  }

  std::map<std::vector<int>, Rational> merged;
  for (const auto& e : graph.edges()) {
    if (e.weight == 0) continue;
    std::vector<int> cells;
    for (int v : e.members) cells.push_back(cell[v]);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.size() < 2) continue;
    merged[cells] += e.weight;
  }
  std::vector<Hyperedge> edges;
  for (auto& [members, w] : merged) edges.push_back(Hyperedge{members, w});
  return Hypergraph(n, std::move(names), std::move(boundary), std::move(edges));
}

}  // namespace hypercone
