#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigInt pow_u64(std::uint64_t base, std::uint64_t exponent);

// floor(sqrt(n)) and ceil(sqrt(n)) for n >= 0.
BigInt isqrt_floor(const BigInt& n);
BigInt isqrt_ceil(const BigInt& n);

// floor / ceil of a rational.
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

bool is_integer(const Rational& r);

// Decimal integer, or "num/den" when the denominator is not 1.
std::string to_string(const BigInt& n);
std::string to_string(const Rational& r);

// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

}  // namespace ffa
