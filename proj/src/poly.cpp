#include "ffa/poly.hpp"

#include <algorithm>

#include "ffa/error.hpp"

namespace ffa {

Poly::Poly(Field field, std::vector<Fe> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto c : c_) {
    if (!field_.contains(c)) throw InvalidArgument("coefficient outside the field");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

Poly Poly::constant(const Field& field, Fe c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, Fe c, std::size_t k) {
  if (c.code == 0) return Poly(field);
  std::vector<Fe> v(k + 1, field.zero());
  v[k] = c;
  return Poly(field, std::move(v));
}

Poly Poly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Fe> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, std::move(v));
}

Fe Poly::operator()(Fe at) const {
  Fe acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, at), c_[i]);
  return acc;
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].code == 0) continue;
    if (!out.empty()) out += " + ";
    std::string term = field_.is_prime_field() ? std::to_string(c_[i].code) : field_.format(c_[i]);
    if (i > 0) {
      term = c_[i] == field_.one() ? std::string(1, var) : term + "*" + var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw InvalidArgument("polynomials over different fields");
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  std::vector<Fe> out(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Fe> out(a.coeffs());
  for (auto& c : out) c = a.field().neg(c);
  return Poly(a.field(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Fe> out(x.size() + y.size() - 1, f.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].code == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].code == 0) continue;
      out[i + j] = f.add(out[i + j], f.mul(x[i], y[j]));
    }
  }
  return Poly(f, std::move(out));
}

Poly scale(const Poly& a, Fe c) {
  std::vector<Fe> out(a.coeffs());
  for (auto& v : out) v = a.field().mul(v, c);
  return Poly(a.field(), std::move(out));
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.is_zero()) return a;
  std::vector<Fe> out(k, a.field().zero());
  out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(a.field(), std::move(out));
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const Field& f = a.field();
  if (a.coeffs().size() < b.coeffs().size()) return {Poly(f), a};
  std::vector<Fe> rem(a.coeffs());
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Fe> quot(rem.size() - db, f.zero());
  const Fe lead_inv = f.inv(d.back());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].code == 0) continue;
    const Fe c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, d[j]));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field().inv(a.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Fe inv = f.inv(r0.lead());
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

Poly derivative(const Poly& a) {
  const Field& f = a.field();
  if (a.coeffs().size() <= 1) return Poly(f);
  std::vector<Fe> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    out[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i % f.characteristic())), a.coeffs()[i]);
  }
  return Poly(f, std::move(out));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& mod) {
  const Field& f = base.field();
  Poly result = Poly::constant(f, f.one()) % mod;
  Poly b = base % mod;
  while (exponent != 0) {
    if (exponent & 1U) result = mulmod(result, b, mod);
    exponent >>= 1U;
    if (exponent != 0) b = mulmod(b, b, mod);
  }
  return result;
}

Poly invmod(const Poly& a, const Poly& mod) {
  auto eg = extended_gcd(a % mod, mod);
  if (!eg.gcd.is_one()) throw InvalidArgument("polynomial is not invertible modulo the modulus");
  return eg.s % mod;
}

Poly pow(const Poly& base, std::uint64_t exponent) {
  const Field& f = base.field();
  Poly result = Poly::constant(f, f.one());
  Poly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

Poly inflate(const Poly& a, std::uint64_t k) {
  if (a.is_zero() || k == 1) return a;
  if (k == 0) {
    Fe sum = a.field().zero();
    for (auto c : a.coeffs()) sum = a.field().add(sum, c);
    return Poly::constant(a.field(), sum);
  }
  std::vector<Fe> out((a.coeffs().size() - 1) * k + 1, a.field().zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i * k] = a.coeffs()[i];
  return Poly(a.field(), std::move(out));
}

bool canonical_less(const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

}  // namespace ffa
