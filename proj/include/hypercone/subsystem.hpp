#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypercone/rational.hpp"

namespace hypercone {

/// Bit i set <=> party i (0-based) is a member. Party n is the purifier O and
/// never appears in a SubsystemLabel.
using PartyMask = std::uint32_t;

inline constexpr int kMaxParties = 16;

struct SubsystemLabel {
  PartyMask mask = 0;

  friend bool operator==(SubsystemLabel, SubsystemLabel) = default;
};

/// Throws InputError unless 1 <= n <= kMaxParties.
void check_party_count(int n);

/// Throws InputError for an empty label or parties outside [0, n).
void check_subsystem(int n, SubsystemLabel s);

/// All 2^n - 1 labels in graded lexicographic order: singletons, then pairs
/// AB, AC, ..., then triples, ..., then the full set.
const std::vector<SubsystemLabel>& canonical_subsystems(int n);

/// Position of `s` in canonical_subsystems(n).
std::size_t canonical_index(int n, SubsystemLabel s);

/// True when a precedes b in the canonical order.
bool canonical_less(int n, SubsystemLabel a, SubsystemLabel b);

/// "A".."E" and "O" for n <= 5, otherwise "P1".."Pn" and "O".
std::string party_label(int n, int party);

/// Index of a party label including the purifier (returns n for "O").
int party_index(int n, std::string_view label);

std::string subsystem_name(int n, SubsystemLabel s);

/// Parses concatenated party labels ("ABD", "P1P3"). Commas and spaces are ignored.
SubsystemLabel parse_subsystem(int n, std::string_view text);

/// Complement within the n + 1 parties, expressed without the purifier:
/// the label J with S(J) = S(I ∪ {O}) by purity.
PartyMask full_mask(int n);

/// Vector indexed by canonical subsystem order. Tag keeps entropy vectors and
/// inequality normals from mixing.
template <class Tag>
class SubsystemVector {
 public:
  SubsystemVector() = default;
  explicit SubsystemVector(int n) : n_(n), entries_((std::size_t{1} << n) - 1) { check_party_count(n); }
  SubsystemVector(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {
    check_party_count(n);
    if (entries_.size() != (std::size_t{1} << n) - 1) throw_size_mismatch(n, entries_.size());
  }

  int parties() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](SubsystemLabel s) { return entries_[canonical_index(n_, s)]; }
  const Rational& operator[](SubsystemLabel s) const { return entries_[canonical_index(n_, s)]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  SubsystemVector& operator+=(const SubsystemVector& other) {
    require_same_n(other);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }
  friend SubsystemVector operator+(SubsystemVector a, const SubsystemVector& b) { return a += b; }
  friend SubsystemVector operator*(const Rational& c, SubsystemVector v) {
    for (auto& e : v.entries_) e *= c;
    return v;
  }
  friend SubsystemVector operator-(SubsystemVector v) {
    for (auto& e : v.entries_) e = -e;
    return v;
  }
  friend bool operator==(const SubsystemVector& a, const SubsystemVector& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  void require_same_n(const SubsystemVector& other) const {
    if (other.n_ != n_) throw_dimension_mismatch(n_, other.n_);
  }

 private:
  [[noreturn]] static void throw_size_mismatch(int n, std::size_t got);
  [[noreturn]] static void throw_dimension_mismatch(int a, int b);

  int n_ = 0;
  std::vector<Rational> entries_;
};

[[noreturn]] void throw_subsystem_vector_size(int n, std::size_t got);
[[noreturn]] void throw_subsystem_vector_dimension(int a, int b);

template <class Tag>
void SubsystemVector<Tag>::throw_size_mismatch(int n, std::size_t got) {
  throw_subsystem_vector_size(n, got);
}
template <class Tag>
void SubsystemVector<Tag>::throw_dimension_mismatch(int a, int b) {
  throw_subsystem_vector_dimension(a, b);
}

struct EntropyTag {};
struct QTag {};

/// Subsystem entropies S(I) for every non-empty I ⊆ [n].
using EntropyVector = SubsystemVector<EntropyTag>;

/// Inward normal of an inequality: the inequality reads Q·S >= 0.
using QVector = SubsystemVector<QTag>;

std::string format_vector(const std::vector<Rational>& entries, bool as_float = false);

}  // namespace hypercone
