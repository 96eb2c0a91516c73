#pragma once

// Exact rational enclosures lower <= x <= upper for irrational quantities.

#include <cstdint>

#include "ffa/bigint.hpp"

namespace ffa {

struct Bracket {
  Rational lower;
  Rational upper;

  bool exact() const { return lower == upper; }
  Rational width() const { return upper - lower; }
};

// q^{k/2}, with dyadic resolution 2^-bits when irrational.
Bracket pow_half(std::uint64_t q, std::uint64_t k, unsigned bits = 64);

// q^{k/4}, with dyadic resolution 2^-bits when irrational.
Bracket pow_quarter(std::uint64_t q, std::uint64_t k, unsigned bits = 64);

// sqrt(n) for a non-negative rational n.
Bracket sqrt_bracket(const Rational& n, unsigned bits = 64);

// log_q(n) for a rational n > 0; exact when n is an integral power of q.
Bracket log_bracket(const Rational& n, std::uint64_t q, unsigned bits = 64);

// Least u >= 0 with q^u >= n, for n >= 1.
std::uint64_t ceil_log(const BigInt& n, std::uint64_t q);

}  // namespace ffa
