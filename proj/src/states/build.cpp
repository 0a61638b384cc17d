#include <algorithm>
#include <numeric>
#include <sstream>

#include "hypercone/errors.hpp"
#include "network.hpp"

namespace hypercone {

namespace detail {

namespace {

struct Node {
  std::vector<int> legs;
  Tensor t;
};

std::size_t checked_size(const std::vector<int>& dims, std::size_t limit) {
  std::size_t size = 1;
  for (int d : dims) {
    if (size > limit / d) throw ResourceError("tensor exceeds " + std::to_string(limit) + " entries");
    size *= d;
  }
  return size;
}

Node contract(const Node& x, const Node& y, std::size_t limit) {
  std::vector<int> shared, free_x, free_y;
  std::vector<int> perm_x, perm_y_shared, perm_y_free;
  for (std::size_t i = 0; i < x.legs.size(); ++i) {
    if (std::find(y.legs.begin(), y.legs.end(), x.legs[i]) != y.legs.end())
      shared.push_back(x.legs[i]);
    else
      free_x.push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < y.legs.size(); ++i)
    if (std::find(shared.begin(), shared.end(), y.legs[i]) == shared.end()) free_y.push_back(static_cast<int>(i));

  std::vector<int> order_x = free_x, order_y;
  for (int leg : shared) {
    const auto ix = std::find(x.legs.begin(), x.legs.end(), leg) - x.legs.begin();
    const auto iy = std::find(y.legs.begin(), y.legs.end(), leg) - y.legs.begin();
    if (x.t.dims[ix] != y.t.dims[iy]) throw std::logic_error("contracted legs have different dimensions");
    order_x.push_back(static_cast<int>(ix));
    order_y.push_back(static_cast<int>(iy));
  }
  order_y.insert(order_y.end(), free_y.begin(), free_y.end());

  const Tensor a = permute(x.t, order_x), b = permute(y.t, order_y);
  std::size_t fx = 1, s = 1, fy = 1;
  Node out;
  for (int i : free_x) {
    fx *= x.t.dims[i];
    out.legs.push_back(x.legs[i]);
    out.t.dims.push_back(x.t.dims[i]);
  }
  for (int i : free_y) {
    fy *= y.t.dims[i];
    out.legs.push_back(y.legs[i]);
    out.t.dims.push_back(y.t.dims[i]);
  }
  s = a.data.size() / fx;
  checked_size(out.t.dims, limit);
  out.t.data.assign(fx * fy, {});
  for (std::size_t i = 0; i < fx; ++i)
    for (std::size_t k = 0; k < s; ++k) {
      const Eisenstein v = a.data[i * s + k];
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < fy; ++j) {
        const Eisenstein w = b.data[k * fy + j];
        if (!w.is_zero()) out.t.data[i * fy + j] = out.t.data[i * fy + j] + v * w;
      }
    }
  out.t.N = x.t.N * y.t.N;
  return out;
}

std::size_t result_size(const Node& x, const Node& y, bool& shares) {
  std::size_t size = 1;
  shares = false;
  for (std::size_t i = 0; i < x.legs.size(); ++i) {
    if (std::find(y.legs.begin(), y.legs.end(), x.legs[i]) != y.legs.end())
      shares = true;
    else
      size *= x.t.dims[i];
  }
  for (std::size_t i = 0; i < y.legs.size(); ++i)
    if (std::find(x.legs.begin(), x.legs.end(), y.legs[i]) == x.legs.end()) size *= y.t.dims[i];
  return size;
}

}  // namespace

Tensor permute(const Tensor& t, const std::vector<int>& order) {
  const std::size_t rank = t.dims.size();
  bool identity = true;
  for (std::size_t i = 0; i < rank; ++i) identity = identity && order[i] == static_cast<int>(i);
  if (identity) return t;
  std::vector<std::size_t> old_stride(rank, 1);
  for (std::size_t i = rank; i-- > 1;) old_stride[i - 1] = old_stride[i] * t.dims[i];
  Tensor out;
  out.N = t.N;
  for (int o : order) out.dims.push_back(t.dims[o]);
  out.data.resize(t.data.size());
  std::vector<int> idx(rank, 0);
  for (std::size_t flat = 0; flat < out.data.size(); ++flat) {
    std::size_t src = 0;
    for (std::size_t i = 0; i < rank; ++i) src += idx[i] * old_stride[order[i]];
    out.data[flat] = t.data[src];
    for (std::size_t i = rank; i-- > 0;) {
      if (++idx[i] < out.dims[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

Degrees bulk_degrees(const Hypergraph& g) {
  Degrees d;
  d.degree.assign(g.vertex_count(), 0);
  for (const auto& e : g.edges())
    for (int v : e.members)
      if (g.is_bulk(v)) ++d.degree[v];
  for (int v : g.bulk_vertices()) {
    const int deg = d.degree[v];
    if (deg == 0) continue;
    if (deg < 2 || deg > 4)
      throw RegistryError("bulk vertex '" + g.vertex_name(v) + "' has degree " + std::to_string(deg) +
                          "; AME tensors are registered for degrees 2, 3 and 4 only");
    if (deg == 4) d.D = 3;
  }
  return d;
}

PartyState build_state_with(const Hypergraph& g, const BuildOptions& options, const VertexOverrides& overrides) {
  for (const auto& e : g.edges())
    if (e.weight != 1) throw InputError("build_state expects unit weights; expand the graph first");
  const Degrees deg = bulk_degrees(g);
  const int D = deg.D;
  const int n = g.parties();

  std::vector<Node> nodes;
  std::vector<std::vector<int>> slots(g.vertex_count());
  std::vector<std::vector<int>> party_legs(n + 1);
  int next_leg = 0;

  for (const auto& e : g.edges()) {
    const int k = static_cast<int>(e.members.size());
    if (k == 2 && !options.explicit_two_edges) {
      const int leg = next_leg++;
      const int u = e.members[0], v = e.members[1];
      if (!g.is_bulk(u) && !g.is_bulk(v)) {
        const int other = next_leg++;
        nodes.push_back({{leg, other}, ghz_tensor(2, D)});
        party_legs[g.party_of(u)].push_back(leg);
        party_legs[g.party_of(v)].push_back(other);
        continue;
      }
      for (int m : e.members) {
        if (g.is_bulk(m))
          slots[m].push_back(leg);
        else
          party_legs[g.party_of(m)].push_back(leg);
      }
      continue;
    }
    Node ghz{{}, ghz_tensor(k, D)};
    for (int m : e.members) {
      const int leg = next_leg++;
      ghz.legs.push_back(leg);
      if (!g.is_bulk(m)) {
        party_legs[g.party_of(m)].push_back(leg);
      } else {
        const int inner = next_leg++;
        nodes.push_back({{leg, inner}, hadamard_tensor(D)});
        slots[m].push_back(inner);
      }
    }
    nodes.push_back(std::move(ghz));
  }
  for (int v : g.bulk_vertices()) {
    if (slots[v].empty()) continue;
    auto it = overrides.find(v);
    Tensor t = it != overrides.end() ? it->second : ame_tensor(static_cast<int>(slots[v].size()), D);
    if (t.dims.size() != slots[v].size()) throw std::logic_error("override tensor has the wrong rank");
    nodes.push_back({slots[v], std::move(t)});
  }

  // Greedy pairwise contraction: smallest intermediate first.
  while (true) {
    std::size_t best_i = 0, best_j = 0, best_size = 0;
    bool found = false;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        bool shares = false;
        const std::size_t size = result_size(nodes[i], nodes[j], shares);
        if (shares && (!found || size < best_size)) {
          found = true;
          best_i = i;
          best_j = j;
          best_size = size;
        }
      }
    if (!found) break;
    Node merged = contract(nodes[best_i], nodes[best_j], options.max_entries);
    nodes.erase(nodes.begin() + best_j);
    nodes[best_i] = std::move(merged);
  }
  Node total{{}, Tensor{{}, {{1, 0}}, 1}};
  for (const auto& node : nodes) total = contract(total, node, options.max_entries);

  // Open legs into party order.
  std::vector<int> order;
  PartyState state;
  state.n = n;
  state.D = D;
  state.party_legs.resize(n + 1);
  state.party_dims.assign(n + 1, 1);
  for (int p = 0; p <= n; ++p)
    for (int leg : party_legs[p]) {
      const auto pos = std::find(total.legs.begin(), total.legs.end(), leg) - total.legs.begin();
      if (pos == static_cast<long>(total.legs.size())) throw std::logic_error("party leg lost during contraction");
      order.push_back(static_cast<int>(pos));
      state.party_legs[p].push_back(total.t.dims[pos]);
      state.party_dims[p] *= total.t.dims[pos];
    }
  if (order.size() != total.legs.size()) throw std::logic_error("dangling legs after contraction");
  Tensor arranged = permute(total.t, order);

  mpz_class sum = 0;
  for (const auto& a : arranged.data)
    if (!a.is_zero()) sum += mpz_class(static_cast<long>(norm(a)));
  if (sum == 0) throw InputError("the constructed state vanishes");
  state.amplitudes = std::move(arranged.data);
  state.N = sum;
  state.prefactor_squared = Rational(arranged.N, sum);
  state.prefactor_squared.canonicalize();
  return state;
}

}  // namespace detail

PartyState build_state(const Hypergraph& unit_graph, const BuildOptions& options) {
  return detail::build_state_with(unit_graph, options, {});
}

std::vector<std::pair<std::string, std::string>> dump_state(const PartyState& state) {
  std::vector<std::pair<std::string, std::string>> out;
  const std::string suffix = "·1/√" + state.N.get_str();
  for (std::size_t flat = 0; flat < state.amplitudes.size(); ++flat) {
    const Eisenstein a = state.amplitudes[flat];
    if (a.is_zero()) continue;
    // Digits, last leg fastest.
    std::vector<std::string> parts(state.n + 1);
    std::size_t rest = flat;
    for (int p = state.n; p >= 0; --p) {
      std::string digits;
      for (auto it = state.party_legs[p].rbegin(); it != state.party_legs[p].rend(); ++it) {
        digits.insert(digits.begin(), static_cast<char>('0' + rest % *it));
        rest /= *it;
      }
      parts[p] = digits;
    }
    std::string ket;
    for (int p = 0; p <= state.n; ++p) {
      if (p) ket += ';';
      ket += parts[p];
    }
    out.emplace_back(ket, to_string(a) + suffix);
  }
  return out;
}

}  // namespace hypercone
