#pragma once

// Lower-numbering ramification filtrations modelled by their group orders,
// with Hilbert's different formula, Herbrand's transition functions and the
// conductor exponent.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffa/bigint.hpp"

namespace ffa {

// Orders g_0 >= g_1 >= ... >= g_{a-1} >= 2 of G_0, G_1, ...; g_i = 1 for i >= a.
class RamFiltration {
 public:
  // Validates: p prime, g_i >= 2, g_{i+1} | g_i, g_1 is the p-part of g_0,
  // and every g_i with i >= 1 is a power of p. An empty sequence means
  // unramified.
  RamFiltration(std::uint64_t p, std::vector<std::uint64_t> orders);

  // "6,3,3"; the empty string is the unramified filtration.
  static RamFiltration parse(std::string_view text, std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  const std::vector<std::uint64_t>& orders() const { return g_; }
  // a: least index with trivial G_i.
  std::size_t length() const { return g_.size(); }
  std::uint64_t ramification_index() const { return g_.empty() ? 1 : g_[0]; }
  std::uint64_t order_at(std::size_t i) const { return i < g_.size() ? g_[i] : 1; }
  bool is_unramified() const { return g_.empty(); }
  bool is_tame() const { return g_.size() == 1; }
  bool is_wild() const { return g_.size() >= 2; }

  std::string to_string() const;

  friend bool operator==(const RamFiltration&, const RamFiltration&) = default;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> g_;
};

// sum_{i<a} (g_i - 1)
std::uint64_t different_exponent(const RamFiltration& f);

// Herbrand phi: x on [-1, 0], then (g_1 + ... + g_{floor x} + frac(x) g_{floor x + 1}) / g_0.
Rational phi_herbrand(const RamFiltration& f, const Rational& x);

// Inverse of phi_herbrand.
Rational psi_herbrand(const RamFiltration& f, const Rational& v);

// Upper-numbering jumps phi(i) at each i where g_i > g_{i+1}.
std::vector<Rational> upper_jumps(const RamFiltration& f);

// Least k >= 0 such that G^v is trivial for all v >= k.
std::uint64_t conductor_exponent(const RamFiltration& f);

// (d + a) / e. Requires a ramified filtration.
Rational conductor_via_identity(const RamFiltration& f);

// True when every upper jump is an integer.
bool satisfies_hasse_arf(const RamFiltration& f);

// c b p^w - 1 - b - (c - 2) b p^{w-1}; requires c >= 2, w >= 1, p prime, p does not divide b.
BigInt abelian_different_lower_bound(std::uint64_t c, std::uint64_t b, std::uint64_t p, std::uint64_t w);

enum class Admissibility {
  // g_0 = b p^w, g_1 = p^w, divisibility chain, n_1 >= 1 and b | n_1.
  LemmaConstraints,
  // The above, restricted to sequences whose upper jumps are all integers.
  HasseArf,
};

// All filtrations with g_0 = b p^w whose level counts n_1..n_w lie in
// [0, n_max] (n_j = #{i >= 1 : g_i = p^{w-j+1}}), ordered by (n_1, ..., n_w)
// lexicographically.
std::vector<RamFiltration> enumerate_filtrations(std::uint64_t b, std::uint64_t p, std::uint64_t w,
                                                 std::uint64_t n_max,
                                                 Admissibility mode = Admissibility::LemmaConstraints);

}  // namespace ffa
