#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "hypercone/rational.hpp"
#include "hypercone/subsystem.hpp"

namespace hypercone {

struct Hyperedge {
  std::vector<int> members;  // sorted vertex indices, at least two
  Rational weight;
};

/// Weighted hypergraph with a boundary coloring. Vertices are identified by
/// index; names are kept for I/O. Party p in [0, n] (n is the purifier O) is
/// attached to exactly one vertex.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<std::string> vertex_names, std::vector<int> boundary,
             std::vector<Hyperedge> edges);

  int parties() const noexcept { return n_; }
  int vertex_count() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& vertex_name(int v) const { return names_.at(v); }
  int vertex_index(std::string_view name) const;

  /// Vertex colored by `party`; party n is the purifier.
  int boundary_vertex(int party) const { return boundary_.at(party); }
  const std::vector<int>& boundary() const noexcept { return boundary_; }
  /// Party coloring vertex v, or -1 for bulk vertices.
  int party_of(int v) const { return party_of_.at(v); }
  bool is_bulk(int v) const { return party_of_.at(v) < 0; }
  /// Bulk vertices in vertex order.
  const std::vector<int>& bulk_vertices() const noexcept { return bulk_; }

  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }

  /// Largest cardinality among edges of nonzero weight; 0 for no such edge.
  int rank() const;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> boundary_;
  std::vector<int> party_of_;
  std::vector<int> bulk_;
  std::vector<Hyperedge> edges_;
};

/// The cut (W, W^c); `included` holds W as sorted vertex indices.
struct Cut {
  std::vector<int> included;

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Builds a cut from vertex names; unknown names are an InputError.
Cut make_cut(const Hypergraph& graph, const std::vector<std::string>& names);

Rational cut_weight(const Hypergraph& graph, const Cut& cut);

struct MinCutOptions {
  int bulk_limit = 24;
  int threads = 0;  // see resolve_threads
};

struct MinCutResult {
  Rational entropy;
  Cut cut;  // lexicographically smallest minimal cut, see min_cut_entropy
};

/// Minimum cut weight over W with W ∩ ∂V = b^{-1}(subsystem). Among minimal
/// cuts the witness has the smallest characteristic string over vertex order,
/// i.e. earlier bulk vertices prefer the complement side.
MinCutResult min_cut_entropy(const Hypergraph& graph, SubsystemLabel subsystem, const MinCutOptions& options = {});

EntropyVector entropy_vector(const Hypergraph& graph, const MinCutOptions& options = {});

struct UnitExpansion {
  mpz_class scale;
  Hypergraph graph;
};

/// Multiplies all weights by the lcm of their denominators and replaces each
/// edge of integer weight m by m parallel unit edges (zero-weight edges vanish).
UnitExpansion expand_to_unit_weights(const Hypergraph& graph, std::size_t max_edges = 1u << 20);

Hypergraph scale_weights(const Hypergraph& graph, const Rational& factor);

/// Boundary vertices are identified per party; bulk vertices of `b` are
/// renamed on collision.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

struct ReductionOptions {
  int max_parties = 3;
  MinCutOptions mincut;
};

/// Collapses the cells cut out by the witnessed min-cuts of every subsystem
/// and sums edge weights across cells. Bulk cells are named "x" followed by
/// their membership string over the canonical subsystems.
Hypergraph universal_reduction(const Hypergraph& graph, const ReductionOptions& options = {});

}  // namespace hypercone
