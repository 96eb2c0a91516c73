#pragma once

// The Carlitz module over F_q[x]: phi(z) = z^q + x z and the action
// z^M = M(phi)(z) as q-linearized polynomials.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffa/bigint.hpp"
#include "ffa/factor.hpp"
#include "ffa/field.hpp"
#include "ffa/poly.hpp"

namespace ffa {

// z -> sum_i a_i(x) z^{q^i}, q = |base|.
class LinearizedOperator {
 public:
  explicit LinearizedOperator(Field base) : base_(std::move(base)) {}
  LinearizedOperator(Field base, std::vector<Poly> coeffs);

  static LinearizedOperator identity(const Field& base);

  const Field& base() const { return base_; }
  const std::vector<Poly>& coeffs() const { return a_; }
  bool is_zero() const { return a_.empty(); }
  // r such that the z-degree is q^r; nullopt for the zero operator.
  std::optional<std::size_t> q_degree() const {
    if (a_.empty()) return std::nullopt;
    return a_.size() - 1;
  }
  Poly coeff(std::size_t i) const { return i < a_.size() ? a_[i] : Poly(base_); }

  // "(x) * z^(q^0) + (1) * z^(q^1)"
  std::string to_string() const;

  friend bool operator==(const LinearizedOperator&, const LinearizedOperator&);

 private:
  void trim();

  Field base_;
  std::vector<Poly> a_;
};

LinearizedOperator operator+(const LinearizedOperator& a, const LinearizedOperator& b);

// (A o B)(z) = A(B(z)); coefficient k is sum_{i+j=k} a_i * b_j^{q^i}.
LinearizedOperator compose(const LinearizedOperator& a, const LinearizedOperator& b);

// M(phi), by Horner in the twisted ring.
LinearizedOperator carlitz_action_of(const Poly& m);

// Polynomial in z whose coefficients are polynomials in x over F_q.
struct ZPoly {
  Field base;
  std::vector<Poly> coeffs;  // coefficient of z^k, ascending

  std::optional<std::size_t> z_degree() const;
  ZPoly derivative_z() const;
};

// rho_M(z) = sum a_i z^{q^i} flattened to a dense polynomial in z.
ZPoly torsion_polynomial(const Poly& m);

// Substitute x := alpha in every coefficient; the result is an additive
// polynomial over the field of alpha (dense in z).
Poly specialize(const LinearizedOperator& op, const FieldElement& alpha);

// |(F_q[x]/(M))^*|. The factorization may be supplied to skip factoring.
BigInt euler_phi_modulus(const Poly& m, std::optional<std::span<const Factor>> factored = std::nullopt);

struct PlaceMultiplicity {
  std::uint64_t degree = 1;
  std::uint64_t multiplicity = 1;
};

// D = sum c_j Q_j described only by place degrees and multiplicities.
struct DivisorShape {
  std::vector<PlaceMultiplicity> places;

  bool empty() const { return places.empty(); }
  std::uint64_t degree() const;  // sum c_j deg Q_j
  void validate() const;
};

// prod (q^{deg Q_j} - 1) q^{(c_j - 1) deg Q_j}; empty product is 1.
BigInt euler_phi_divisor(const DivisorShape& d, std::uint64_t q);

}  // namespace ffa
