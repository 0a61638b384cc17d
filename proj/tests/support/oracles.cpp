#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace oracle {

Rational cut_weight(const Hypergraph& g, std::uint64_t w_mask) {
  Rational total = 0;
  for (const Hyperedge& e : g.edges()) {
    bool in = false, out = false;
    for (int v : e.members) (w_mask >> v & 1 ? in : out) = true;
    if (in && out) total += e.weight;
  }
  return total;
}

Rational min_cut(const Hypergraph& g, std::uint32_t parties) {
  const int V = g.vertex_count();
  std::optional<Rational> best;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << V); ++w) {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) {
      const int p = g.party_of(v);
      if (p >= 0) ok = ((w >> v & 1) != 0) == ((parties >> p & 1) != 0);
    }
    if (!ok) continue;
    const Rational c = cut_weight(g, w);
    if (!best || c < *best) best = c;
  }
  return *best;
}

EntropyVector entropy_vector(const Hypergraph& g) {
  const int n = g.parties();
  EntropyVector s(n);
  const auto& subs = canonical_subsystems(n);
  for (std::size_t i = 0; i < subs.size(); ++i) s[i] = min_cut(g, subs[i].mask);
  return s;
}

Rational indicator_sum(const std::vector<std::uint64_t>& strings, int width, const std::vector<Rational>& weights) {
  Rational total = 0;
  for (int col = 0; col < width; ++col) {
    const int shift = width - 1 - col;
    bool zero = false, one = false;
    for (std::uint64_t s : strings) (s >> shift & 1 ? one : zero) = true;
    if (zero && one) total += weights[col];
  }
  return total;
}

namespace {

bool next_combination(std::vector<std::uint64_t>& c, std::uint64_t n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

TupleVerdict check_rank(const ContractionMap& map, const Inequality& ineq, int k) {
  const ExpandedInequality ex = expand_rhs(ineq);
  std::vector<Rational> lw, rw(ex.columns(), Rational(1));
  for (const Term& t : ex.lhs) lw.push_back(t.coefficient);
  const std::uint64_t n = std::uint64_t{1} << map.L;
  TupleVerdict out;
  if (static_cast<std::uint64_t>(k) > n) return out;
  std::vector<std::uint64_t> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  do {
    std::vector<std::uint64_t> img;
    for (std::uint64_t x : c) img.push_back(map.images[x]);
    const Rational lhs = indicator_sum(c, map.L, lw);
    const Rational rhs = indicator_sum(img, map.Rp, rw);
    if (lhs < rhs) return {true, c, lhs, rhs};
  } while (next_combination(c, n));
  return out;
}

std::complex<double> to_complex(Eisenstein z) {
  const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2);
  return static_cast<double>(z.a) + static_cast<double>(z.b) * omega;
}

namespace {

Eigen::MatrixXcd reduced_matrix(const PartyState& state, std::uint32_t parties) {
  const int P = state.n + 1;
  std::uint64_t dim_in = 1, dim_out = 1;
  for (int p = 0; p < P; ++p) (parties >> p & 1 ? dim_in : dim_out) *= state.party_dims[p];
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(dim_in, dim_out);
  const double scale = 1.0 / std::sqrt(state.N.get_d());
  std::vector<std::uint64_t> digit(P);
  for (std::uint64_t index = 0; index < state.amplitudes.size(); ++index) {
    std::uint64_t rest = index;
    for (int p = P - 1; p >= 0; --p) {
      digit[p] = rest % state.party_dims[p];
      rest /= state.party_dims[p];
    }
    std::uint64_t row = 0, col = 0;
    for (int p = 0; p < P; ++p) {
      if (parties >> p & 1) row = row * state.party_dims[p] + digit[p];
      else col = col * state.party_dims[p] + digit[p];
    }
    psi(row, col) = to_complex(state.amplitudes[index]) * scale;
  }
  return psi * psi.adjoint();
}

}  // namespace

double state_entropy(const PartyState& state, std::uint32_t parties, int base) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced_matrix(state, parties));
  double s = 0;
  for (double l : solver.eigenvalues())
    if (l > 1e-12) s -= l * std::log(l);
  return s / std::log(static_cast<double>(base));
}

int state_rank(const PartyState& state, std::uint32_t parties) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced_matrix(state, parties));
  int r = 0;
  for (double l : solver.eigenvalues()) r += l > 1e-9;
  return r;
}

}  // namespace oracle
