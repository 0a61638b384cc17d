#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercone/hypergraph.hpp"

namespace hypercone {

/// a + b*omega with omega = exp(2*pi*i/3). Qubit constructions only ever use b = 0.
struct Eisenstein {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const Eisenstein&, const Eisenstein&) = default;
};

Eisenstein operator+(Eisenstein x, Eisenstein y);
Eisenstein operator-(Eisenstein x, Eisenstein y);
Eisenstein operator*(Eisenstein x, Eisenstein y);
Eisenstein conj(Eisenstein x);
/// |x|^2 = a^2 - ab + b^2.
std::int64_t norm(Eisenstein x);
std::string to_string(Eisenstein x);

/// Dense tensor whose entries are data / sqrt(N). Leg 0 is the slowest index.
struct Tensor {
  std::vector<int> dims;
  std::vector<Eisenstein> data;
  mpz_class N = 1;

  std::size_t size() const { return data.size(); }
  const Eisenstein& at(const std::vector<int>& index) const;
};

/// delta / sqrt(d) over `omega` legs.
Tensor ghz_tensor(int omega, int d);

/// Registry: degree 2 -> identity, 3 -> GHZ(3, d), 4 -> the qutrit perfect tensor
/// T^{ijkl} = delta(k, i+j) delta(l, i+2j) / 3 (requires d = 3). Anything else
/// is a RegistryError.
Tensor ame_tensor(int degree, int d);

/// Real Hadamard for d = 2, Fourier matrix omega^{jk} for d = 3.
Tensor hadamard_tensor(int d);

struct BuildOptions {
  /// Treat 2-edges like larger edges: Bell pair plus Hadamards at bulk incidences.
  bool explicit_two_edges = false;
  std::size_t max_entries = std::size_t{1} << 26;
};

struct PartyState {
  int n = 0;
  int D = 2;
  /// Leg dimensions of each party index (n + 1 parties, purifier last), in
  /// the order the incidences appear in the edge list.
  std::vector<std::vector<int>> party_legs;
  std::vector<std::uint64_t> party_dims;
  /// Dense amplitudes over party indices, party 0 slowest; state = data / sqrt(N).
  std::vector<Eisenstein> amplitudes;
  mpz_class N = 1;
  /// Square of the scalar that turns the raw contraction into a unit vector.
  Rational prefactor_squared = 1;
  /// Optional relabeling applied by the local-basis search, if any.
  std::vector<std::string> notes;
};

/// Expects unit weights (InputError otherwise). D = 3 when some bulk vertex has
/// degree 4, else 2. Legs of a bulk tensor follow the order of its incident
/// edges in the edge list.
PartyState build_state(const Hypergraph& unit_graph, const BuildOptions& options = {});

struct EntropyValue {
  bool flat = false;
  std::uint64_t rank = 0;              // rank of the reduced density matrix
  std::optional<Rational> exact;       // log_base(rank) when rank is a power of base and the spectrum is flat
  double value = 0;                    // von Neumann entropy in the given base
};

EntropyValue reduced_entropy(const PartyState& state, SubsystemLabel subsystem, int base);

struct SubsystemCheck {
  SubsystemLabel subsystem;
  EntropyValue state;
  Rational cut;
  bool match = false;
};

struct StateReport {
  int D = 2;
  mpz_class unit_scale = 1;               // weight scale used before building
  std::optional<Rational> common_factor;  // state entropy / cut entropy
  std::vector<SubsystemCheck> checks;
  bool all_flat = true;
  int matches = 0;
  std::vector<std::string> notes;

  bool all_match() const { return matches == static_cast<int>(checks.size()); }
};

struct VerifyStateOptions {
  BuildOptions build;
  /// On mismatch, retry with leg permutations and diagonal phases at one
  /// degree-3 or degree-4 vertex at a time and log the first fix found.
  bool local_basis_search = false;
};

StateReport verify_state_entropies(const Hypergraph& graph, const VerifyStateOptions& options = {});

/// Nonzero amplitudes as (ket, amplitude) pairs. The ket lists each party's
/// digits separated by ';', the amplitude reads "<numerator>·1/√N".
std::vector<std::pair<std::string, std::string>> dump_state(const PartyState& state);

}  // namespace hypercone
