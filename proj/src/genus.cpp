#include "ffa/genus.hpp"

#include "ffa/error.hpp"
#include "ffa/field.hpp"

namespace ffa {

void validate_prime_power(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  if (!is_prime(p)) throw InvalidArgument("q must be a prime power");
  std::uint64_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1) throw InvalidArgument("q must be a prime power");
}

GenusResult GenusResult::from_two_g_minus_2(const BigInt& value) {
  if (value < -2) throw InvariantViolation("2g-2 = " + to_string(value) + " is below -2");
  if (value % 2 != 0) throw InvariantViolation("2g-2 = " + to_string(value) + " is odd");
  return {value, (value + 2) / 2};
}

BigInt RamSummary::different_degree() const {
  BigInt total = 0;
  for (const auto& e : entries) total += e.different_exponent * e.place_degree * e.count;
  return total;
}

GenusResult hurwitz(const BigInt& n, const BigInt& g_base, const RamSummary& ram) {
  if (n < 1) throw InvalidArgument("hurwitz: extension degree must be >= 1");
  if (g_base < 0) throw InvalidArgument("hurwitz: base genus must be >= 0");
  for (const auto& e : ram.entries) {
    if (e.place_degree == 0 || e.count < 1 || e.different_exponent < 0) {
      throw InvalidArgument("hurwitz: malformed ramification entry");
    }
  }
  return GenusResult::from_two_g_minus_2(n * (2 * g_base - 2) + ram.different_degree());
}

GenusResult cyclotomic_genus(std::uint64_t q, std::uint64_t d, std::uint64_t n) {
  validate_prime_power(q);
  if (d < 1 || n < 1) throw InvalidArgument("cyclotomic_genus: d and n must be >= 1");
  const BigInt bq = q;
  const BigInt qd1 = pow(bq, d) - 1;
  const BigInt dn = BigInt(d) * n;
  const BigInt inner = (bq * dn - dn - bq) * (qd1 / (bq - 1)) - BigInt(d);
  return GenusResult::from_two_g_minus_2(pow(bq, d * (n - 1)) * inner);
}

GenusResult example31_genus(std::uint64_t q, std::uint64_t d) {
  validate_prime_power(q);
  if (d < 1) throw InvalidArgument("example31_genus: d must be >= 1");
  const BigInt bq = q;
  const BigInt qd = pow(bq, d);
  const BigInt value = (qd - 1) * -2 + (qd - 2) * d + (bq - 2) * (qd - 1) / (bq - 1);
  return GenusResult::from_two_g_minus_2(value);
}

GenusResult example32_genus(std::uint64_t q, std::uint64_t d, std::uint64_t n) {
  validate_prime_power(q);
  if (d < 1) throw InvalidArgument("example32_genus: d must be >= 1");
  if (n < 2) throw InvalidArgument("example32_genus: n must be >= 2");
  const BigInt bq = q;
  const BigInt qd1 = pow(bq, d) - 1;
  const BigInt lift = pow(bq, d * (n - 1));
  const BigInt value = qd1 * lift * -2 + (BigInt(n) * qd1 * lift - lift) * d + (bq - 2) * qd1 * lift / (bq - 1);
  return GenusResult::from_two_g_minus_2(value);
}

CyclotomicData cyclotomic_ramification(std::uint64_t q, std::uint64_t d, std::uint64_t n) {
  validate_prime_power(q);
  if (d < 1 || n < 1) throw InvalidArgument("cyclotomic_ramification: d and n must be >= 1");
  const BigInt bq = q;
  const BigInt qd1 = pow(bq, d) - 1;
  const BigInt lift = pow(bq, d * (n - 1));
  CyclotomicData out;
  out.degree = qd1 * lift;
  // P: totally ramified
  out.ram.entries.push_back({d, BigInt(n) * qd1 * lift - lift, 1});
  // infinity: splits into phi/(q-1) places of degree 1, each with e = q-1
  if (q > 2) out.ram.entries.push_back({1, bq - 2, out.degree / (bq - 1)});
  return out;
}

GenusResult cyclotomic_genus_via_hurwitz(std::uint64_t q, std::uint64_t d, std::uint64_t n) {
  const auto data = cyclotomic_ramification(q, d, n);
  return hurwitz(data.degree, 0, data.ram);
}

Rational ray_class_degree(const BigInt& h, const BigInt& t, std::uint64_t q, const DivisorShape& d) {
  if (d.empty()) throw InvalidArgument("ray_class_degree: empty modulus (use class_group_order)");
  if (h < 1 || t < 1) throw InvalidArgument("ray_class_degree: h and t must be >= 1");
  validate_prime_power(q);
  return Rational(h * t * euler_phi_divisor(d, q), BigInt(q - 1));
}

Rational ray_class_genus(const BigInt& h, const BigInt& g_e, std::uint64_t q, const DivisorShape& d) {
  if (d.empty()) throw InvalidArgument("ray_class_genus: empty modulus");
  if (h < 1 || g_e < 0) throw InvalidArgument("ray_class_genus: need h >= 1 and g_E >= 0");
  validate_prime_power(q);
  const BigInt phi = euler_phi_divisor(d, q);
  Rational w = 0;
  if (d.places.size() == 1) {
    const auto& q1 = d.places[0];
    const BigInt phi1 = euler_phi_divisor(DivisorShape{{{q1.degree, 1}}}, q);
    w = (Rational(phi, phi1) - q - 2) * q1.degree;
  } else {
    for (const auto& pl : d.places) {
      const BigInt phij = euler_phi_divisor(DivisorShape{{{pl.degree, 1}}}, q);
      w += Rational(phi * pl.degree, phij);
    }
  }
  const Rational bracket = Rational(phi * (2 * g_e - 2 + BigInt(d.degree()))) - w;
  return 1 + Rational(h, BigInt(2 * q - 2)) * bracket;
}

BigInt class_group_order(const BigInt& h, const BigInt& t) {
  if (h < 1 || t < 1) throw InvalidArgument("class_group_order: h and t must be >= 1");
  return t * h;
}

bool is_genus_value(const Rational& r) { return r >= 0 && is_integer(r); }

}  // namespace ffa
