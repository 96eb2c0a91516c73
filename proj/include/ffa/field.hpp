#pragma once

// Prime-power finite fields F_{p^s} in polynomial-basis representation over
// F_p, and the deterministic embeddings between them.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ffa {

// An element of some field, stored as the base-p integer sum c_i p^i of its
// polynomial-basis coordinates. Meaningless without the owning Field.
struct Fe {
  std::uint64_t code = 0;

  friend constexpr auto operator<=>(Fe, Fe) = default;
};

// Immutable handle to F_{p^s} = F_p[t]/(modulus). Copies share state.
class Field {
 public:
  // Builds the field from an explicit monic modulus (ascending digits,
  // length s+1). Irreducibility is the caller's responsibility; use
  // make_field for a checked construction.
  static Field from_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const;
  unsigned degree() const;      // s
  std::uint64_t size() const;   // q = p^s
  bool is_prime_field() const { return degree() == 1; }
  const std::vector<std::uint64_t>& modulus() const;

  Fe zero() const { return {0}; }
  Fe one() const { return {1}; }
  Fe generator() const;  // the class of t
  Fe from_int(std::int64_t n) const;
  Fe from_coords(std::span<const std::uint64_t> coords) const;  // c_0 .. c_{s-1}
  std::vector<std::uint64_t> coords(Fe a) const;
  bool contains(Fe a) const { return a.code < size(); }

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const;
  Fe pow(Fe a, std::uint64_t e) const;
  Fe frobenius(Fe a) const;  // a^p
  Fe pth_root(Fe a) const;   // inverse of frobenius

  // "[c_{s-1},...,c_0]"
  std::string format(Fe a) const;
  std::string describe() const;  // "F_9 = F_3[t]/(1 + 0*t + 1*t^2)"

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);

// F_{p^s} whose modulus is the first monic irreducible of degree s over F_p
// in lexicographic order (coefficients c_{s-1} first), starting the scan at
// index seed mod p^s and wrapping around.
Field make_field(std::uint64_t p, unsigned s, std::uint64_t seed = 0);

// An element together with its field; convenient at API boundaries.
struct FieldElement {
  Field field;
  Fe value;

  std::string to_string() const { return field.format(value); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
};

class Poly;

// The fixed embedding source -> target: the source generator goes to the
// least root (by coordinate vector) of the source modulus in target. Equal
// fields embed by the identity.
class Embedding {
 public:
  Embedding(Field source, Field target);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Fe image_of_generator() const { return generator_image_; }

  Fe operator()(Fe a) const;
  Poly map(const Poly& f) const;

 private:
  Field source_;
  Field target_;
  Fe generator_image_;
  std::vector<Fe> basis_;  // images of t^0 .. t^{s-1}
};

FieldElement embed(const FieldElement& e, const Field& target);

}  // namespace ffa
