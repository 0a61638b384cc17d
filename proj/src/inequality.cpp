#include "hypercone/inequality.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hypercone/errors.hpp"

namespace hypercone {

namespace {

void normalize_side(int n, std::vector<Term>& side, const char* which) {
  std::set<PartyMask> seen;
  for (const auto& t : side) {
    check_subsystem(n, t.subsystem);
    if (t.coefficient <= 0) throw InputError(std::string(which) + " coefficient must be positive");
    if (!seen.insert(t.subsystem.mask).second)
      throw InputError("subsystem " + subsystem_name(n, t.subsystem) + " repeated on the " + which);
  }
  std::sort(side.begin(), side.end(),
            [n](const Term& a, const Term& b) { return canonical_less(n, a.subsystem, b.subsystem); });
}

}  // namespace

Inequality::Inequality(int n, std::vector<Term> lhs, std::vector<Term> rhs)
    : n_(n), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  check_party_count(n_);
  normalize_side(n_, lhs_, "LHS");
  normalize_side(n_, rhs_, "RHS");
}

Rational Inequality::alpha_total() const {
  Rational s = 0;
  for (const auto& t : lhs_) s += t.coefficient;
  return s;
}

Rational Inequality::beta_total() const {
  Rational s = 0;
  for (const auto& t : rhs_) s += t.coefficient;
  return s;
}

Inequality q_to_terms(const QVector& q) {
  if (q.is_zero()) throw InputError("all-zero Q-vector");
  const auto& labels = canonical_subsystems(q.parties());
  std::vector<Term> lhs, rhs;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] > 0) lhs.push_back({labels[i], q[i]});
    if (q[i] < 0) rhs.push_back({labels[i], -q[i]});
  }
  return Inequality(q.parties(), std::move(lhs), std::move(rhs));
}

QVector terms_to_q(const Inequality& ineq) {
  QVector q(ineq.parties());
  for (const auto& t : ineq.lhs()) q[t.subsystem] += t.coefficient;
  for (const auto& t : ineq.rhs()) q[t.subsystem] -= t.coefficient;
  return q;
}

Inequality negate(const Inequality& ineq) { return Inequality(ineq.parties(), ineq.rhs(), ineq.lhs()); }

ExpandedInequality expand_rhs(const Inequality& ineq) {
  ExpandedInequality out;
  out.n = ineq.parties();
  out.lhs = ineq.lhs();
  for (const auto& t : ineq.rhs()) {
    if (!is_integer(t.coefficient))
      throw InputError("RHS coefficient " + to_string(t.coefficient) + " of " + subsystem_name(out.n, t.subsystem) +
                       " is not an integer; rescale the inequality first");
    if (t.coefficient > 64) throw InputError("RHS coefficient too large to expand");
    for (long c = 0; c < t.coefficient.get_num().get_si(); ++c) out.rhs_columns.push_back(t.subsystem);
  }
  if (out.L() > 63 || out.columns() > 63) throw InputError("inequality too wide for bit-string encoding");
  return out;
}

Rational evaluate(const QVector& q, const EntropyVector& s) {
  if (q.parties() != s.parties()) throw InputError("Q-vector and entropy vector have different party counts");
  Rational total = 0;
  for (std::size_t i = 0; i < q.size(); ++i) total += q[i] * s[i];
  return total;
}

OccurrenceVectors occurrence_vectors(const ExpandedInequality& ineq) {
  OccurrenceVectors occ;
  occ.L = ineq.L();
  occ.columns = ineq.columns();
  occ.x.assign(ineq.n + 1, 0);
  occ.y.assign(ineq.n + 1, 0);
  for (int p = 0; p < ineq.n; ++p) {
    const PartyMask bit = PartyMask{1} << p;
    for (int l = 0; l < occ.L; ++l)
      if (ineq.lhs[l].subsystem.mask & bit) occ.x[p] |= std::uint64_t{1} << (occ.L - 1 - l);
    for (int r = 0; r < occ.columns; ++r)
      if (ineq.rhs_columns[r].mask & bit) occ.y[p] |= std::uint64_t{1} << (occ.columns - 1 - r);
  }
  return occ;
}

Inequality purify(const Inequality& ineq, int party) {
  const int n = ineq.parties();
  if (party < 0 || party >= n) throw InputError("purify: party index out of range");
  const PartyMask bit = PartyMask{1} << party;
  auto image = [&](SubsystemLabel s) {
    if (!(s.mask & bit)) return s;
    return SubsystemLabel{(full_mask(n) & ~s.mask) | bit};
  };
  QVector q(n);
  for (const auto& t : ineq.lhs()) q[image(t.subsystem)] += t.coefficient;
  for (const auto& t : ineq.rhs()) q[image(t.subsystem)] -= t.coefficient;
  return q_to_terms(q);
}

std::string format_inequality(const Inequality& ineq) {
  const int n = ineq.parties();
  auto side = [n](const std::vector<Term>& terms) {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) os << " + ";
      if (terms[i].coefficient != 1) os << to_string(terms[i].coefficient) << "*";
      os << "S(" << subsystem_name(n, terms[i].subsystem) << ")";
    }
    if (terms.empty()) os << "0";
    return os.str();
  };
  return side(ineq.lhs()) + " >= " + side(ineq.rhs());
}

}  // namespace hypercone
