#pragma once

// Closed-form genus and degree evaluators for function fields over F_q.

#include <cstdint>
#include <string>
#include <vector>

#include "ffa/bigint.hpp"
#include "ffa/carlitz.hpp"

namespace ffa {

struct GenusResult {
  BigInt two_g_minus_2;
  BigInt g;

  // Throws InvariantViolation when the value is odd or below -2.
  static GenusResult from_two_g_minus_2(const BigInt& value);

  friend bool operator==(const GenusResult&, const GenusResult&) = default;
};

struct RamEntry {
  std::uint64_t place_degree = 1;
  BigInt different_exponent = 0;
  BigInt count = 1;
};

struct RamSummary {
  std::vector<RamEntry> entries;

  // deg Diff = sum d * deg * count
  BigInt different_degree() const;
};

// 2g - 2 = n (2 g_base - 2) + deg Diff
GenusResult hurwitz(const BigInt& n, const BigInt& g_base, const RamSummary& ram);

// Genus of the cyclotomic field k(Lambda_{P^n}) for P of degree d.
GenusResult cyclotomic_genus(std::uint64_t q, std::uint64_t d, std::uint64_t n);

// (q^d-1)(-2) + (q^d-2) d + (q-2)(q^d-1)/(q-1)
GenusResult example31_genus(std::uint64_t q, std::uint64_t d);

// (q^d-1) q^{d(n-1)} (-2) + [n (q^d-1) q^{d(n-1)} - q^{d(n-1)}] d + (q-2)(q^d-1) q^{d(n-1)}/(q-1); n >= 2.
GenusResult example32_genus(std::uint64_t q, std::uint64_t d, std::uint64_t n);

// Extension degree and ramification data of k(Lambda_{P^n}) / k, reassembled
// through hurwitz().
struct CyclotomicData {
  BigInt degree;  // phi(P^n)
  RamSummary ram;
};
CyclotomicData cyclotomic_ramification(std::uint64_t q, std::uint64_t d, std::uint64_t n);
GenusResult cyclotomic_genus_via_hurwitz(std::uint64_t q, std::uint64_t d, std::uint64_t n);

// h t phi(D) / (q - 1); D must be nonempty.
Rational ray_class_degree(const BigInt& h, const BigInt& t, std::uint64_t q, const DivisorShape& d);

// 1 + h/(2q-2) [phi(D)(2 g_E - 2 + deg D) - w]; D must be nonempty.
Rational ray_class_genus(const BigInt& h, const BigInt& g_e, std::uint64_t q, const DivisorShape& d);

// |Cl(A)| = t h for the empty modulus.
BigInt class_group_order(const BigInt& h, const BigInt& t);

// True if r is a non-negative integer.
bool is_genus_value(const Rational& r);

void validate_prime_power(std::uint64_t q);

}  // namespace ffa
