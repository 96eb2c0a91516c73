#pragma once

#include <cstdint>
#include <vector>

#include "ffa/field.hpp"
#include "ffa/poly.hpp"

namespace ffa {

struct Factor {
  Poly poly;  // monic irreducible
  std::size_t multiplicity = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

inline constexpr std::uint64_t kDefaultSplitSeed = 0x5eed5eedULL;

// Squarefree decomposition, distinct-degree and equal-degree splitting.
// Factors are distinct and sorted by canonical_less; the product of
// factor^multiplicity times lead(f) equals f.
std::vector<Factor> factorize(const Poly& f, std::uint64_t seed = kDefaultSplitSeed);

// Rabin's test: x^{q^n} = x mod f and gcd(x^{q^{n/l}} - x, f) = 1 for each
// prime l | n.
bool is_irreducible(const Poly& f);

// Distinct roots of f in its own coefficient field, ascending by code.
std::vector<Fe> roots(const Poly& f, std::uint64_t seed = kDefaultSplitSeed);

// Distinct roots of f in the extension K, through the fixed Embedding.
std::vector<FieldElement> roots_in(const Poly& f, const Field& k);

// Number of distinct roots of f in F_{q^m}, q = |coefficient field|, as
// deg gcd(f, x^{q^m} - x). No extension field is built.
std::uint64_t count_roots_in_ext(const Poly& f, std::uint64_t m);

// x^{q^k} mod f by k successive q-th powers.
Poly frobenius_power_of_x(const Poly& f, std::uint64_t k);

}  // namespace ffa
