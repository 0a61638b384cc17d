#include "hypercone/subsystem.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>

#include "hypercone/errors.hpp"

namespace hypercone {

namespace {

struct Order {
  std::vector<SubsystemLabel> labels;
  std::vector<std::uint32_t> index;  // mask -> position
};

Order build_order(int n) {
  Order order;
  order.index.assign(std::size_t{1} << n, 0);
  for (int size = 1; size <= n; ++size) {
    // Lexicographic combinations of {0..n-1} of the given size.
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      PartyMask mask = 0;
      for (int p : combo) mask |= PartyMask{1} << p;
      order.index[mask] = static_cast<std::uint32_t>(order.labels.size());
      order.labels.push_back(SubsystemLabel{mask});
      int i = size - 1;
      while (i >= 0 && combo[i] == n - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return order;
}

const Order& order_for(int n) {
  static std::array<std::unique_ptr<Order>, kMaxParties + 1> cache;
  static std::array<std::once_flag, kMaxParties + 1> flags;
  check_party_count(n);
  std::call_once(flags[n], [n] { cache[n] = std::make_unique<Order>(build_order(n)); });
  return *cache[n];
}

}  // namespace

void check_party_count(int n) {
  if (n < 1 || n > kMaxParties)
    throw InputError("party count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxParties) + "]");
}

void check_subsystem(int n, SubsystemLabel s) {
  check_party_count(n);
  if (s.mask == 0) throw InputError("empty subsystem");
  if (s.mask & ~full_mask(n)) throw InputError("subsystem refers to a party outside [1, n]");
}

PartyMask full_mask(int n) { return n >= 32 ? ~PartyMask{0} : (PartyMask{1} << n) - 1; }

const std::vector<SubsystemLabel>& canonical_subsystems(int n) { return order_for(n).labels; }

std::size_t canonical_index(int n, SubsystemLabel s) {
  check_subsystem(n, s);
  return order_for(n).index[s.mask];
}

bool canonical_less(int n, SubsystemLabel a, SubsystemLabel b) {
  return canonical_index(n, a) < canonical_index(n, b);
}

std::string party_label(int n, int party) {
  check_party_count(n);
  if (party == n) return "O";
  if (party < 0 || party > n) throw InputError("party index out of range");
  if (n <= 5) return std::string(1, static_cast<char>('A' + party));
  return "P" + std::to_string(party + 1);
}

int party_index(int n, std::string_view label) {
  check_party_count(n);
  if (label == "O") return n;
  for (int p = 0; p < n; ++p)
    if (party_label(n, p) == label) return p;
  throw InputError("unknown party label '" + std::string(label) + "'");
}

std::string subsystem_name(int n, SubsystemLabel s) {
  std::string out;
  for (int p = 0; p < n; ++p)
    if (s.mask & (PartyMask{1} << p)) out += party_label(n, p);
  return out;
}

SubsystemLabel parse_subsystem(int n, std::string_view text) {
  check_party_count(n);
  PartyMask mask = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int party = -1;
    if (c == 'P' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      int value = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) value = value * 10 + (text[j++] - '0');
      if (value < 1 || value > n) throw ParseError("unknown party 'P" + std::to_string(value) + "'", i);
      party = value - 1;
      i = j;
    } else if (n <= 5 && c >= 'A' && c < 'A' + n) {
      party = c - 'A';
      ++i;
    } else {
      throw ParseError(std::string("unknown party '") + c + "'", i);
    }
    mask |= PartyMask{1} << party;
  }
  if (mask == 0) throw InputError("empty subsystem '" + std::string(text) + "'");
  return SubsystemLabel{mask};
}

void throw_subsystem_vector_size(int n, std::size_t got) {
  throw InputError("expected " + std::to_string((std::size_t{1} << n) - 1) + " entries for n=" + std::to_string(n) +
                   ", got " + std::to_string(got));
}

void throw_subsystem_vector_dimension(int a, int b) {
  throw InputError("party count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string format_vector(const std::vector<Rational>& entries, bool as_float) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    if (as_float)
      os << to_double(entries[i]);
    else
      os << to_string(entries[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace hypercone
