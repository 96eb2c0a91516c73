#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffa/field.hpp"

namespace ffa {

// Dense univariate polynomial over a finite field, coefficients ascending.
// Always canonical: no trailing zero coefficients, so the zero polynomial
// has an empty coefficient vector and no degree.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Fe> coeffs);

  static Poly constant(const Field& field, Fe c);
  static Poly monomial(const Field& field, Fe c, std::size_t k);
  static Poly x(const Field& field) { return monomial(field, field.one(), 1); }
  // Coefficients given as prime-field integers, ascending.
  static Poly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<Fe>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  Fe lead() const { return c_.empty() ? field_.zero() : c_.back(); }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

  Fe operator()(Fe at) const;  // Horner evaluation

  // "c0 + c1*x + c2*x^2", ascending. Prime-field coefficients print as
  // integers, others by Field::format; zero terms are skipped and a unit
  // coefficient is omitted ("x^2"). The zero polynomial renders as "0".
  std::string to_string(char var = 'x') const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();

  Field field_;
  std::vector<Fe> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Fe c);
Poly shift(const Poly& a, std::size_t k);  // a * x^k

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

Poly make_monic(const Poly& a);
Poly gcd(const Poly& a, const Poly& b);  // monic; gcd(0, 0) = 0

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;    // s*a + t*b = gcd
  Poly t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& a);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& mod);
Poly invmod(const Poly& a, const Poly& mod);  // requires gcd(a, mod) = 1
Poly pow(const Poly& base, std::uint64_t exponent);

// Substitution a(x^k): coefficient of x^i moves to x^{ik}.
Poly inflate(const Poly& a, std::uint64_t k);

// Degree first, then coefficients compared from the top down.
bool canonical_less(const Poly& a, const Poly& b);

void require_same_field(const Poly& a, const Poly& b);

}  // namespace ffa
