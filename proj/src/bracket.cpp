#include "ffa/bracket.hpp"

#include "ffa/error.hpp"

namespace ffa {

namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

// floor(n^{1/4})
BigInt iroot4_floor(const BigInt& n) { return isqrt_floor(isqrt_floor(n)); }

}  // namespace

Bracket sqrt_bracket(const Rational& n, unsigned bits) {
  if (n < 0) throw InvalidArgument("sqrt_bracket: negative argument");
  const BigInt num = numerator(n);
  const BigInt den = denominator(n);
  const BigInt prod = num * den;  // sqrt(n) = sqrt(num * den) / den
  const BigInt root = isqrt_floor(prod);
  if (root * root == prod) return {Rational(root, den), Rational(root, den)};
  const BigInt scale = BigInt(1) << bits;
  const BigInt lo = isqrt_floor(prod * scale * scale);
  return {Rational(lo, den * scale), Rational(lo + 1, den * scale)};
}

Bracket pow_half(std::uint64_t q, std::uint64_t k, unsigned bits) {
  if (q < 2) throw InvalidArgument("pow_half: q must be >= 2");
  if (k % 2 == 0) {
    const Rational v(pow_u64(q, k / 2));
    return {v, v};
  }
  return sqrt_bracket(Rational(pow_u64(q, k)), bits);
}

Bracket pow_quarter(std::uint64_t q, std::uint64_t k, unsigned bits) {
  if (q < 2) throw InvalidArgument("pow_quarter: q must be >= 2");
  const BigInt n = pow_u64(q, k);
  const BigInt r = iroot4_floor(n);
  if (r * r * r * r == n) return {Rational(r), Rational(r)};
  const BigInt scale = BigInt(1) << bits;
  const BigInt s4 = scale * scale * scale * scale;
  const BigInt lo = iroot4_floor(n * s4);
  return {Rational(lo, scale), Rational(lo + 1, scale)};
}

std::uint64_t ceil_log(const BigInt& n, std::uint64_t q) {
  if (q < 2) throw InvalidArgument("ceil_log: q must be >= 2");
  if (n < 1) throw InvalidArgument("ceil_log: argument must be >= 1");
  std::uint64_t u = 0;
  BigInt acc = 1;
  while (acc < n) {
    acc *= q;
    ++u;
  }
  return u;
}

Bracket log_bracket(const Rational& n, std::uint64_t q, unsigned bits) {
  if (q < 2) throw InvalidArgument("log_bracket: base must be >= 2");
  if (n <= 0) throw InvalidArgument("log_bracket: argument must be positive");
  if (n < 1) {
    Bracket inv = log_bracket(1 / n, q, bits);
    return {-inv.upper, -inv.lower};
  }
  // k = floor(log_q n)
  std::uint64_t k = 0;
  BigInt qk = 1;
  while (Rational(qk * q) <= n) {
    qk *= q;
    ++k;
  }
  const Rational x = n / Rational(qk);
  if (x == 1) return {Rational(k), Rational(k)};

  // Fixed-point interval for x in [1, q); squaring doubles log_q x, and each
  // time the square reaches q the next binary digit is 1.
  const unsigned prec = 2 * bits + 64;
  const BigInt one = BigInt(1) << prec;
  const BigInt target = BigInt(q) << prec;
  BigInt lo = numerator(x) * one / denominator(x);
  BigInt hi = ceil_div(numerator(x) * one, denominator(x));
  Rational digits = 0;
  Rational step = 1;
  unsigned done = 0;
  for (; done < bits; ++done) {
    lo = (lo * lo) >> prec;
    hi = ceil_div(hi * hi, one);
    step /= 2;
    if (lo >= target) {
      digits += step;
      lo = lo / q;
      hi = ceil_div(hi, BigInt(q));
    } else if (hi >= target) {
      // digit undecided at this precision
      step *= 2;
      break;
    }
  }
  return {Rational(k) + digits, Rational(k) + digits + step};
}

}  // namespace ffa
