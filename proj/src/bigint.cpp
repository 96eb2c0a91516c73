#include "ffa/bigint.hpp"

#include <boost/multiprecision/integer.hpp>

#include "ffa/error.hpp"

namespace ffa {

namespace mp = boost::multiprecision;

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigInt pow_u64(std::uint64_t base, std::uint64_t exponent) {
  return pow(BigInt(base), exponent);
}

BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative integer");
  return mp::sqrt(n);
}

BigInt isqrt_ceil(const BigInt& n) {
  BigInt r = isqrt_floor(n);
  if (r * r != n) ++r;
  return r;
}

BigInt floor(const Rational& r) {
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt f = floor(r);
  if (Rational(f) != r) ++f;
  return f;
}

bool is_integer(const Rational& r) { return mp::denominator(r) == 1; }

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw InvalidArgument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InvalidArgument("malformed integer literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw InvalidArgument("malformed integer literal: " + std::string(s));
      }
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace ffa
