#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypercone/rational.hpp"
#include "hypercone/subsystem.hpp"

namespace hypercone {

struct Term {
  SubsystemLabel subsystem;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// sum_l alpha_l S(I_l) >= sum_r beta_r S(J_r), coefficients strictly
/// positive, no subsystem repeated within a side. Terms are kept in canonical
/// subsystem order.
class Inequality {
 public:
  Inequality() = default;
  Inequality(int n, std::vector<Term> lhs, std::vector<Term> rhs);

  int parties() const noexcept { return n_; }
  const std::vector<Term>& lhs() const noexcept { return lhs_; }
  const std::vector<Term>& rhs() const noexcept { return rhs_; }
  int L() const noexcept { return static_cast<int>(lhs_.size()); }
  int R() const noexcept { return static_cast<int>(rhs_.size()); }
  Rational alpha_total() const;
  Rational beta_total() const;

  friend bool operator==(const Inequality&, const Inequality&) = default;

 private:
  int n_ = 0;
  std::vector<Term> lhs_, rhs_;
};

Inequality q_to_terms(const QVector& q);
QVector terms_to_q(const Inequality& ineq);

/// Exchanges the two sides (the inequality for -q).
Inequality negate(const Inequality& ineq);

/// RHS with each beta_r > 1 replaced by beta_r adjacent unit columns.
struct ExpandedInequality {
  int n = 0;
  std::vector<Term> lhs;
  std::vector<SubsystemLabel> rhs_columns;

  int L() const noexcept { return static_cast<int>(lhs.size()); }
  int columns() const noexcept { return static_cast<int>(rhs_columns.size()); }
};

/// Throws InputError if an RHS coefficient is not an integer.
ExpandedInequality expand_rhs(const Inequality& ineq);

Rational evaluate(const QVector& q, const EntropyVector& s);

/// x^(i) over the LHS terms and y^(i) over the expanded RHS columns, for every
/// party i in [0, n] (index n is the purifier). The first term is the most
/// significant bit.
struct OccurrenceVectors {
  int L = 0;
  int columns = 0;
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> y;
};

OccurrenceVectors occurrence_vectors(const ExpandedInequality& ineq);

/// Swaps `party` with the purifier: a term I containing `party` becomes
/// ([n] \ I) ∪ {party}. Terms landing on the same subsystem are combined.
Inequality purify(const Inequality& ineq, int party);

/// Accepts sums of [c*]S(..), [c*]I(X:Y), I(X:Y|Z) and I(X:Y:Z) on both sides of
/// a single ">=". Labels containing the purifier O are replaced by their
/// complement. Throws ParseError with a character position.
Inequality parse_inequality(std::string_view text, int n);

std::string format_inequality(const Inequality& ineq);

}  // namespace hypercone
