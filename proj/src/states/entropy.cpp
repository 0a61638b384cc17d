#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <unordered_map>

#include "hypercone/errors.hpp"
#include "network.hpp"

namespace hypercone {

namespace {

using Big = boost::multiprecision::cpp_int;

struct BigEis {
  Big a, b;
  bool is_zero() const { return a == 0 && b == 0; }
};

BigEis mul(const BigEis& x, const BigEis& y) {
  const Big bd = x.b * y.b;
  return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
}

BigEis sub(const BigEis& x, const BigEis& y) { return {x.a - y.a, x.b - y.b}; }

// Exact quotient in Z[omega]; the caller guarantees divisibility.
BigEis divide(const BigEis& x, const BigEis& y) {
  const BigEis yc{y.a - y.b, -y.b};
  const Big n = y.a * y.a - y.a * y.b + y.b * y.b;
  BigEis num = mul(x, yc);
  if (num.a % n != 0 || num.b % n != 0) throw std::logic_error("inexact division in fraction-free elimination");
  return {num.a / n, num.b / n};
}

// Fraction-free (Bareiss) elimination over Z[omega].
std::uint64_t bareiss_rank(std::vector<std::vector<BigEis>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  BigEis prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = divide(sub(mul(m[r][c], m[i][j]), mul(m[i][c], m[r][j])), prev);
      m[i][c] = {0, 0};
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

using SparseRow = std::unordered_map<std::uint64_t, Eisenstein>;

}  // namespace

EntropyValue reduced_entropy(const PartyState& state, SubsystemLabel subsystem, int base) {
  check_subsystem(state.n, subsystem);
  if (base < 2) throw InputError("entropy base must be at least 2");
  std::uint64_t dim_in = 1, dim_out = 1;
  for (int p = 0; p <= state.n; ++p) {
    const bool in = p < state.n && (subsystem.mask >> p & 1);
    (in ? dim_in : dim_out) *= state.party_dims[p];
  }
  const bool rows_inside = dim_in <= dim_out;
  const std::uint64_t m = rows_inside ? dim_in : dim_out;
  if (m > (1u << 16)) throw ResourceError("reduced density matrix too large");

  // Group amplitudes by column of the (rows | columns) reshaping.
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, Eisenstein>>> by_column;
  for (std::size_t flat = 0; flat < state.amplitudes.size(); ++flat) {
    const Eisenstein a = state.amplitudes[flat];
    if (a.is_zero()) continue;
    std::uint64_t rest = flat, in_idx = 0, out_idx = 0, in_stride = 1, out_stride = 1;
    for (int p = state.n; p >= 0; --p) {
      const std::uint64_t d = state.party_dims[p], digit = rest % d;
      rest /= d;
      if (p < state.n && (subsystem.mask >> p & 1)) {
        in_idx += digit * in_stride;
        in_stride *= d;
      } else {
        out_idx += digit * out_stride;
        out_stride *= d;
      }
    }
    const std::uint64_t row = rows_inside ? in_idx : out_idx, col = rows_inside ? out_idx : in_idx;
    by_column[col].emplace_back(row, a);
  }

  std::vector<SparseRow> gram(m);
  for (const auto& [col, entries] : by_column)
    for (const auto& [r, x] : entries)
      for (const auto& [s, y] : entries) {
        Eisenstein& g = gram[r][s];
        g = g + x * conj(y);
      }
  for (auto& row : gram)
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);

  mpz_class tr = 0, tr2 = 0;
  for (std::uint64_t r = 0; r < m; ++r) {
    auto it = gram[r].find(r);
    if (it != gram[r].end()) tr += mpz_class(static_cast<long>(it->second.a));
    for (const auto& [s, g] : gram[r]) tr2 += mpz_class(static_cast<long>(norm(g)));
  }

  EntropyValue out;
  // Flat spectrum <=> tr(rho) rho^2 = tr(rho^2) rho.
  bool flat = tr > 0;
  for (std::uint64_t r = 0; r < m && flat; ++r) {
    SparseRow square;
    for (const auto& [k, g_rk] : gram[r])
      for (const auto& [s, g_ks] : gram[k]) {
        Eisenstein& acc = square[s];
        acc = acc + g_rk * g_ks;
      }
    for (const auto& [s, g] : gram[r])
      if (!square.count(s)) square[s] = {0, 0};
    for (const auto& [s, sq] : square) {
      auto it = gram[r].find(s);
      const Eisenstein g = it == gram[r].end() ? Eisenstein{} : it->second;
      if (tr * mpz_class(static_cast<long>(sq.a)) != tr2 * mpz_class(static_cast<long>(g.a)) ||
          tr * mpz_class(static_cast<long>(sq.b)) != tr2 * mpz_class(static_cast<long>(g.b))) {
        flat = false;
        break;
      }
    }
  }

  if (flat) {
    const mpz_class tr_sq = tr * tr;
    if (tr_sq % tr2 != 0) throw std::logic_error("flat spectrum with non-integral rank");
    const mpz_class rank = tr_sq / tr2;
    out.flat = true;
    out.rank = rank.get_ui();
    out.value = std::log(static_cast<double>(out.rank)) / std::log(static_cast<double>(base));
    std::uint64_t power = 1;
    long exponent = 0;
    while (power < out.rank) {
      power *= static_cast<std::uint64_t>(base);
      ++exponent;
    }
    if (power == out.rank) out.exact = Rational(exponent);
    return out;
  }

  // Non-flat: exact rank by elimination, spectrum in floating point.
  if (m > 2048) throw ResourceError("non-flat reduced state too large for dense diagonalization");
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(m, m);
  std::vector<std::vector<BigEis>> exact(m, std::vector<BigEis>(m, BigEis{0, 0}));
  for (std::uint64_t r = 0; r < m; ++r)
    for (const auto& [s, g] : gram[r]) {
      rho(r, s) = static_cast<double>(g.a) + static_cast<double>(g.b) * w;
      exact[r][s] = {g.a, g.b};
    }
  out.rank = bareiss_rank(std::move(exact));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  const double trace = tr.get_d();
  double entropy = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()[i] / trace;
    if (lambda > 1e-15) entropy -= lambda * std::log(lambda);
  }
  out.value = entropy / std::log(static_cast<double>(base));
  return out;
}

StateReport verify_state_entropies(const Hypergraph& graph, const VerifyStateOptions& options) {
  const UnitExpansion expansion = expand_to_unit_weights(graph);
  const Hypergraph& g = expansion.graph;
  const EntropyVector cuts = entropy_vector(g);
  const auto& labels = canonical_subsystems(g.parties());

  auto evaluate = [&](const PartyState& state) {
    StateReport report;
    report.D = state.D;
    report.unit_scale = expansion.scale;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      SubsystemCheck check{labels[i], reduced_entropy(state, labels[i], state.D), cuts[i], false};
      report.all_flat = report.all_flat && check.state.flat;
      if (!report.common_factor && cuts[i] != 0 && check.state.exact) report.common_factor = *check.state.exact / cuts[i];
      report.checks.push_back(std::move(check));
    }
    for (auto& check : report.checks) {
      if (!check.state.flat || !check.state.exact) continue;
      const Rational factor = report.common_factor.value_or(Rational(0));
      check.match = *check.state.exact == factor * check.cut;
      if (check.match) ++report.matches;
    }
    return report;
  };

  StateReport report = evaluate(detail::build_state_with(g, options.build, {}));
  if (report.all_match() || !options.local_basis_search) return report;

  // One vertex at a time: permute its legs, then put a diagonal phase on its first leg.
  const detail::Degrees deg = detail::bulk_degrees(g);
  const int D = deg.D;
  const std::vector<Eisenstein> roots =
      D == 2 ? std::vector<Eisenstein>{{1, 0}, {-1, 0}} : std::vector<Eisenstein>{{1, 0}, {0, 1}, {-1, -1}};
  for (int v : g.bulk_vertices()) {
    const int d = deg.degree[v];
    if (d != 3 && d != 4) continue;
    const Tensor base_tensor = ame_tensor(d, D);
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i;
    do {
      const Tensor permuted = detail::permute(base_tensor, order);
      std::size_t patterns = 1;
      for (int i = 0; i < D; ++i) patterns *= roots.size();
      for (std::size_t pattern = 0; pattern < patterns; ++pattern) {
        Tensor t = permuted;
        std::vector<Eisenstein> phase(D);
        std::size_t code = pattern;
        for (int i = 0; i < D; ++i) {
          phase[i] = roots[code % roots.size()];
          code /= roots.size();
        }
        const std::size_t block = t.data.size() / D;
        for (std::size_t idx = 0; idx < t.data.size(); ++idx) t.data[idx] = t.data[idx] * phase[idx / block];
        StateReport candidate = evaluate(detail::build_state_with(g, options.build, {{v, t}}));
        if (candidate.all_match()) {
          std::string perm;
          for (int o : order) perm += std::to_string(o);
          std::string ph;
          for (const auto& p : phase) ph += to_string(p) + " ";
          candidate.notes.push_back("local basis fix at vertex '" + g.vertex_name(v) + "': legs " + perm +
                                    ", phases " + ph);
          return candidate;
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  report.notes.push_back("local basis search found no fix");
  return report;
}

}  // namespace hypercone
