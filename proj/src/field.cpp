#include "ffa/field.hpp"

#include <array>
#include <limits>
#include <sstream>

#include "ffa/error.hpp"
#include "ffa/factor.hpp"
#include "ffa/poly.hpp"

namespace ffa {

namespace {

constexpr unsigned kMaxDegree = 64;
constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 62;

using Digits = std::array<std::uint64_t, 2 * kMaxDegree>;

}  // namespace

struct Field::Impl {
  std::uint64_t p = 0;
  unsigned s = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // ascending, monic, length s+1
  std::uint64_t modulus_bits = 0;      // p == 2 only: modulus without the leading term

  void decode(std::uint64_t code, std::uint64_t* out) const {
    for (unsigned i = 0; i < s; ++i) {
      out[i] = code % p;
      code /= p;
    }
  }

  std::uint64_t encode(const std::uint64_t* digits) const {
    std::uint64_t code = 0;
    for (unsigned i = s; i-- > 0;) code = code * p + digits[i];
    return code;
  }
};

Field Field::from_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p) || p >= kMaxCharacteristic) {
    throw InvalidArgument("field characteristic must be a prime below 2^31, got " +
                          std::to_string(p));
  }
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw InvalidArgument("field modulus must be monic of degree >= 1");
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->s = static_cast<unsigned>(modulus.size() - 1);
  if (impl->s > kMaxDegree) throw InvalidArgument("field degree too large");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < impl->s; ++i) {
    if (q > kMaxSize / p) throw InvalidArgument("field size exceeds 2^62");
    q *= p;
  }
  impl->q = q;
  for (auto& c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  if (p == 2) {
    for (unsigned i = 0; i < impl->s; ++i) impl->modulus_bits |= modulus[i] << i;
  }
  impl->modulus = std::move(modulus);
  return Field(std::move(impl));
}

std::uint64_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->s; }
std::uint64_t Field::size() const { return impl_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return impl_->modulus; }

Fe Field::generator() const {
  if (impl_->s == 1) return from_int(-static_cast<std::int64_t>(impl_->modulus[0]));
  return {impl_->p};
}

Fe Field::from_int(std::int64_t n) const {
  auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

Fe Field::from_coords(std::span<const std::uint64_t> coords) const {
  if (coords.size() > impl_->s) throw InvalidArgument("too many coordinates for field");
  std::array<std::uint64_t, kMaxDegree> d{};
  for (std::size_t i = 0; i < coords.size(); ++i) d[i] = coords[i] % impl_->p;
  return {impl_->encode(d.data())};
}

std::vector<std::uint64_t> Field::coords(Fe a) const {
  std::vector<std::uint64_t> out(impl_->s);
  impl_->decode(a.code, out.data());
  return out;
}

Fe Field::add(Fe a, Fe b) const {
  const auto p = impl_->p;
  if (p == 2) return {a.code ^ b.code};
  if (impl_->s == 1) {
    std::uint64_t r = a.code + b.code;
    return {r >= p ? r - p : r};
  }
  std::uint64_t r = 0;
  std::uint64_t place = 1;
  std::uint64_t x = a.code;
  std::uint64_t y = b.code;
  while (x != 0 || y != 0) {
    std::uint64_t d = x % p + y % p;
    if (d >= p) d -= p;
    r += d * place;
    place *= p;
    x /= p;
    y /= p;
  }
  return {r};
}

Fe Field::neg(Fe a) const {
  const auto p = impl_->p;
  if (p == 2) return a;
  if (impl_->s == 1) return {a.code == 0 ? 0 : p - a.code};
  std::uint64_t r = 0;
  std::uint64_t place = 1;
  std::uint64_t x = a.code;
  while (x != 0) {
    std::uint64_t d = x % p;
    r += (d == 0 ? 0 : p - d) * place;
    place *= p;
    x /= p;
  }
  return {r};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
  const Impl& f = *impl_;
  const auto p = f.p;
  if (f.s == 1) return {(a.code * b.code) % p};
  if (p == 2) {
    unsigned __int128 prod = 0;
    for (std::uint64_t y = b.code, shift = 0; y != 0; y >>= 1U, ++shift) {
      if (y & 1U) prod ^= static_cast<unsigned __int128>(a.code) << shift;
    }
    for (unsigned i = 2 * f.s - 2; i >= f.s; --i) {
      if ((prod >> i) & 1U) {
        prod ^= static_cast<unsigned __int128>(1) << i;
        prod ^= static_cast<unsigned __int128>(f.modulus_bits) << (i - f.s);
      }
    }
    return {static_cast<std::uint64_t>(prod)};
  }
  std::array<std::uint64_t, kMaxDegree> x{};
  std::array<std::uint64_t, kMaxDegree> y{};
  f.decode(a.code, x.data());
  f.decode(b.code, y.data());
  Digits prod{};
  for (unsigned i = 0; i < f.s; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < f.s; ++j) {
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
  }
  for (unsigned i = 2 * f.s - 2; i >= f.s; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    const std::uint64_t negc = p - c;
    for (unsigned j = 0; j < f.s; ++j) {
      prod[i - f.s + j] = (prod[i - f.s + j] + negc * f.modulus[j]) % p;
    }
  }
  return {f.encode(prod.data())};
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  Fe result = one();
  Fe base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

Fe Field::inv(Fe a) const {
  if (a.code == 0) throw InvalidArgument("inverse of zero");
  return pow(a, impl_->q - 2);
}

Fe Field::div(Fe a, Fe b) const { return mul(a, inv(b)); }

Fe Field::frobenius(Fe a) const { return pow(a, impl_->p); }

Fe Field::pth_root(Fe a) const { return pow(a, impl_->q / impl_->p); }

std::string Field::format(Fe a) const {
  auto c = coords(a);
  std::string out = "[";
  for (std::size_t i = c.size(); i-- > 0;) {
    out += std::to_string(c[i]);
    if (i != 0) out += ",";
  }
  return out + "]";
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << size() << " = F_" << characteristic() << "[t]/(";
  for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
    if (i != 0) os << " + ";
    os << impl_->modulus[i];
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.impl_->p != b.impl_->p) return false;
  // every F_p model has the same arithmetic
  if (a.degree() == 1 && b.degree() == 1) return true;
  return a.impl_->modulus == b.impl_->modulus;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field make_field(std::uint64_t p, unsigned s, std::uint64_t seed) {
  if (!is_prime(p)) {
    throw InvalidArgument("make_field: characteristic " + std::to_string(p) + " is not prime");
  }
  if (s == 0) throw InvalidArgument("make_field: extension degree must be >= 1");
  const Field prime = Field::from_modulus(p, {0, 1});
  if (s == 1) return Field::from_modulus(p, {seed % p, 1});

  std::uint64_t count = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (count > kMaxSize / p) throw InvalidArgument("make_field: field size exceeds 2^62");
    count *= p;
  }
  const std::uint64_t start = seed % count;
  for (std::uint64_t step = 0; step < count; ++step) {
    std::uint64_t index = (start + step) % count;
    std::vector<Fe> coeffs(s + 1);
    std::vector<std::uint64_t> digits(s + 1);
    for (unsigned i = 0; i < s; ++i) {
      digits[i] = index % p;
      coeffs[i] = Fe{digits[i]};
      index /= p;
    }
    digits[s] = 1;
    coeffs[s] = prime.one();
    if (is_irreducible(Poly(prime, coeffs))) return Field::from_modulus(p, std::move(digits));
  }
  throw BudgetExceeded("make_field: no irreducible polynomial found");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (!(a.field == b.field)) throw InvalidArgument("field mismatch");
  return {a.field, a.field.add(a.value, b.value)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  if (!(a.field == b.field)) throw InvalidArgument("field mismatch");
  return {a.field, a.field.sub(a.value, b.value)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (!(a.field == b.field)) throw InvalidArgument("field mismatch");
  return {a.field, a.field.mul(a.value, b.value)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (!(a.field == b.field)) throw InvalidArgument("field mismatch");
  return {a.field, a.field.div(a.value, b.value)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field == b.field && a.value == b.value;
}

Embedding::Embedding(Field source, Field target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.characteristic() != target_.characteristic()) {
    throw InvalidArgument("embed: characteristics differ");
  }
  if (target_.degree() % source_.degree() != 0) {
    throw InvalidArgument("embed: F_" + std::to_string(source_.size()) + " does not embed in F_" +
                          std::to_string(target_.size()));
  }
  if (source_ == target_) {
    generator_image_ = target_.generator();
  } else if (source_.is_prime_field()) {
    generator_image_ = target_.from_int(static_cast<std::int64_t>(source_.generator().code));
  } else {
    std::vector<Fe> coeffs;
    for (auto c : source_.modulus()) coeffs.push_back(target_.from_int(static_cast<std::int64_t>(c)));
    auto r = roots(Poly(target_, std::move(coeffs)));
    if (r.empty()) throw InvariantViolation("embed: source modulus has no root in target");
    generator_image_ = r.front();
  }
  basis_.resize(source_.degree());
  Fe power = target_.one();
  for (auto& b : basis_) {
    b = power;
    power = target_.mul(power, generator_image_);
  }
}

Fe Embedding::operator()(Fe a) const {
  if (source_ == target_) return a;
  auto c = source_.coords(a);
  Fe out = target_.zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out = target_.add(out, target_.mul(target_.from_int(static_cast<std::int64_t>(c[i])), basis_[i]));
  }
  return out;
}

Poly Embedding::map(const Poly& f) const {
  if (!(f.field() == source_)) throw InvalidArgument("embed: polynomial over the wrong field");
  std::vector<Fe> out;
  out.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) out.push_back((*this)(c));
  return Poly(target_, std::move(out));
}

FieldElement embed(const FieldElement& e, const Field& target) {
  return {target, Embedding(e.field, target)(e.value)};
}

}  // namespace ffa
