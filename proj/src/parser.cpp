#include <cctype>
#include <string>

#include "hypercone/errors.hpp"
#include "hypercone/inequality.hpp"

namespace hypercone {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n), q_(n) {}

  Inequality run() {
    skip_space();
    if (at_end()) fail("empty inequality");
    parse_side(Rational(1));
    expect_relation();
    parse_side(Rational(-1));
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    if (q_.is_zero()) throw ParseError("trivial inequality: all terms cancel", 0);
    return q_to_terms(q_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_relation() {
    skip_space();
    const std::string_view rest = text_.substr(pos_);
    if (rest.starts_with(">=")) {
      pos_ += 2;
    } else if (rest.starts_with("≥")) {
      pos_ += std::string_view("≥").size();
    } else if (rest.starts_with("<") || rest.starts_with(">") || rest.starts_with("=") ||
               rest.starts_with("≤")) {
      fail("only '>=' inequalities are supported");
    } else {
      fail("expected '>='");
    }
  }

  // side := ['+'|'-'] term (('+'|'-') term)*
  void parse_side(const Rational& side_sign) {
    Rational sign = 1;
    skip_space();
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    parse_term(side_sign * sign);
    while (true) {
      skip_space();
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
      parse_term(side_sign * sign);
    }
  }

  std::string_view number_token() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' || peek() == '/')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void parse_term(const Rational& sign) {
    skip_space();
    Rational coefficient = 1;
    const std::size_t term_start = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string_view token = number_token();
      try {
        coefficient = parse_rational(token);
      } catch (const InputError&) {
        pos_ = term_start;
        fail("invalid coefficient '" + std::string(token) + "'");
      }
      skip_space();
      if (accept('*')) {
      } else if (peek() != 'S' && peek() != 'I') {
        if (coefficient != 0) {
          pos_ = term_start;
          fail("nonzero constant term");
        }
        return;
      }
    }
    skip_space();
    const char head = peek();
    if (head != 'S' && head != 'I') fail("expected S(...) or I(...)");
    ++pos_;
    expect('(');
    const Rational c = sign * coefficient;
    if (head == 'S') {
      add(parse_label(), c);
    } else {
      std::vector<PartyMask> parts{parse_raw_label()};
      while (accept(':')) parts.push_back(parse_raw_label());
      PartyMask given = 0;
      if (accept('|')) given = parse_raw_label();
      if (parts.size() == 2) {
        // I(X:Y|Z) = S(XZ) + S(YZ) - S(XYZ) - S(Z)
        add_raw(parts[0] | given, c);
        add_raw(parts[1] | given, c);
        add_raw(parts[0] | parts[1] | given, -c);
        if (given) add_raw(given, -c);
      } else if (parts.size() == 3 && !given) {
        // I(X:Y:Z) = S(X)+S(Y)+S(Z)-S(XY)-S(XZ)-S(YZ)+S(XYZ)
        add_raw(parts[0], c);
        add_raw(parts[1], c);
        add_raw(parts[2], c);
        add_raw(parts[0] | parts[1], -c);
        add_raw(parts[0] | parts[2], -c);
        add_raw(parts[1] | parts[2], -c);
        add_raw(parts[0] | parts[1] | parts[2], c);
      } else {
        fail("I(...) takes X:Y, X:Y|Z or X:Y:Z");
      }
    }
    expect(')');
  }

  // Parties as a mask over n + 1 bits; bit n is the purifier.
  PartyMask parse_raw_label() {
    skip_space();
    PartyMask mask = 0;
    bool any = false;
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++pos_;
        continue;
      }
      int party = -1;
      if (c == 'O') {
        party = n_;
        ++pos_;
      } else if (c == 'P' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        const std::size_t start = pos_++;
        int value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (text_[pos_++] - '0');
        if (value < 1 || value > n_) {
          pos_ = start;
          fail("unknown party 'P" + std::to_string(value) + "'");
        }
        party = value - 1;
      } else if (n_ <= 5 && c >= 'A' && c < 'A' + n_) {
        party = c - 'A';
        ++pos_;
      } else if (std::isalnum(static_cast<unsigned char>(c))) {
        fail(std::string("unknown party '") + c + "'");
      } else {
        break;
      }
      mask |= PartyMask{1} << party;
      any = true;
    }
    if (!any) fail("empty subsystem");
    return mask;
  }

  PartyMask parse_label() { return parse_raw_label(); }

  void add(PartyMask raw, const Rational& c) { add_raw(raw, c); }

  // Purity: a label containing O equals its complement in [n+1].
  void add_raw(PartyMask raw, const Rational& c) {
    const PartyMask all = (PartyMask{1} << (n_ + 1)) - 1;
    if (raw & (PartyMask{1} << n_)) raw = all & ~raw;
    if (raw == 0) return;  // S(empty) = S(everything) = 0
    q_[SubsystemLabel{raw}] += c;
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
  QVector q_;
};

}  // namespace

Inequality parse_inequality(std::string_view text, int n) {
  check_party_count(n);
  return Parser(text, n).run();
}

}  // namespace hypercone
