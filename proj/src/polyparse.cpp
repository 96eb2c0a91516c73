#include "ffa/polyparse.hpp"

#include <cctype>
#include <string>

#include "ffa/error.hpp"

namespace ffa {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& field) : field_(field) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  Poly parse() {
    if (s_.empty()) fail("empty polynomial");
    Poly acc(field_);
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Poly term = parse_term();
      acc = negative ? acc - term : acc + term;
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse polynomial '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  static bool is_var(char c) {
    return c == 'x' || c == 'X' || c == 'y' || c == 'Y' || c == 't' || c == 'T' || c == 'z';
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto digit = static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (v > (UINT64_MAX - digit) / 10) fail("number too large");
      v = v * 10 + digit;
    }
    return v;
  }

  Fe coefficient() {
    if (peek() == '[') {
      ++pos_;
      std::vector<std::uint64_t> top_first;
      for (;;) {
        top_first.push_back(number());
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() != ']') fail("expected ',' or ']'");
        ++pos_;
        break;
      }
      if (top_first.size() > field_.degree()) fail("too many coordinates");
      std::vector<std::uint64_t> coords(top_first.rbegin(), top_first.rend());
      for (auto c : coords) {
        if (c >= field_.characteristic()) fail("coordinate out of range");
      }
      return field_.from_coords(coords);
    }
    const std::uint64_t v = number() % field_.characteristic();
    return field_.from_int(static_cast<std::int64_t>(v));
  }

  Poly parse_term() {
    Fe c = field_.one();
    bool have_coeff = false;
    if (peek() == '[' || std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coefficient();
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (!is_var(peek())) fail("expected a variable after '*'");
      }
    }
    std::size_t k = 0;
    if (is_var(peek())) {
      ++pos_;
      k = 1;
      if (peek() == '^') {
        ++pos_;
        k = static_cast<std::size_t>(number());
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    return Poly::monomial(field_, c, k);
  }

  const Field& field_;
  std::string s_;
  std::size_t pos_ = 0;
};

std::string_view strip_parens(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

Poly parse_poly(std::string_view text, const Field& field) {
  return Parser(strip_parens(text), field).parse();
}

RationalMap parse_rational_map(std::string_view text, const Field& field) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      if (slash != std::string_view::npos) throw InvalidArgument("rational map with more than one '/'");
      slash = i;
    }
  }
  if (slash == std::string_view::npos) return RationalMap::polynomial(parse_poly(text, field));
  return RationalMap(parse_poly(text.substr(0, slash), field), parse_poly(text.substr(slash + 1), field));
}

}  // namespace ffa
