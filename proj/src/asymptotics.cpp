#include "ffa/asymptotics.hpp"

#include <cmath>

#include "ffa/error.hpp"
#include "ffa/genus.hpp"

namespace ffa {

std::uint64_t t_of(std::uint64_t q, std::uint64_t g) {
  if (g < 2) throw InvalidArgument("t_of: genus must be >= 2");
  validate_prime_power(q);
  return 18 + ceil_log(pow_u64(g, 6), q);
}

TOfReport t_of_report(std::uint64_t q, std::uint64_t g) {
  TOfReport r;
  r.t = t_of(q, g);
  const double naive = 6.0 * std::log(static_cast<double>(g)) / std::log(static_cast<double>(q)) + 18.0;
  r.naive_float = static_cast<std::int64_t>(std::ceil(naive));
  return r;
}

void ChebotarevParams::validate() const {
  validate_prime_power(q);
  if (k < 1 || m < 1 || d < 1 || conj_size < 1) {
    throw InvalidArgument("chebotarev: k, m, d and |C| must be positive");
  }
  if (conj_size > m) throw InvalidArgument("chebotarev: |C| exceeds m");
}

ChebotarevBound chebotarev_lower(const ChebotarevParams& p, unsigned bits) {
  p.validate();
  const Bracket half = pow_half(p.q, p.k, bits);
  const Bracket quarter = pow_quarter(p.q, p.k, bits);
  const Rational share(BigInt(p.conj_size), BigInt(p.k) * p.m);
  ChebotarevBound out;
  out.main_term = share * Rational(pow_u64(p.q, p.k));
  out.error_upper = 2 * share * Rational(BigInt(p.m) + p.g_f) * half.upper +
                    Rational(BigInt(p.m) * (2 * BigInt(p.g_e) + 1)) * quarter.upper +
                    Rational(BigInt(p.g_f) + BigInt(p.d) * p.m);
  out.lower = out.main_term - out.error_upper;
  out.exact_powers = half.exact() && quarter.exact();
  return out;
}

FeasibilityReport splitting_place_feasible(std::uint64_t q, std::uint64_t g,
                                           std::optional<std::uint64_t> t_override) {
  if (g < 2) throw InvalidArgument("splitting_place_feasible: genus must be >= 2");
  validate_prime_power(q);
  FeasibilityReport r;
  r.q = q;
  r.g = g;
  r.t = t_override ? *t_override : t_of(q, g);
  if (r.t < 1) throw InvalidArgument("splitting_place_feasible: t must be >= 1");
  r.m = 4 * g + 4;
  r.d = (2 * g + 1) * r.t;
  const BigInt qt = pow_u64(q, r.t);
  const Bracket half = pow_half(q, r.t);
  const Bracket quarter = pow_quarter(q, r.t);
  const BigInt bm = r.m;
  const BigInt bg = g;
  const Rational share(qt, 4 * bm * r.t);  // q^t / (4 m t)

  auto check = [](std::string name, Rational lhs, Rational rhs, bool strict) {
    InequalityCheck c{std::move(name), std::move(lhs), std::move(rhs), strict, false};
    c.holds = strict ? c.lhs < c.rhs : c.lhs <= c.rhs;
    return c;
  };
  r.checks[0] = check("8(m+g)q^(t/2) <= q^t", 8 * Rational(bm + bg) * half.upper, Rational(qt), false);
  r.checks[1] = check("m(2g+1)q^(t/4) <= q^t/(4mt)", Rational(bm * (2 * bg + 1)) * quarter.upper, share, false);
  r.checks[2] = check("g < q^t/(4mt)", Rational(bg), share, true);
  r.checks[3] = check("dm <= q^t/(4mt)", Rational(BigInt(r.d) * bm), share, false);
  r.feasible = true;
  for (const auto& c : r.checks) r.feasible = r.feasible && c.holds;
  return r;
}

MfBoundReport mf_log_upper_bound(std::uint64_t q, std::uint64_t t, std::uint64_t g_e,
                                 std::uint64_t conductor_degree) {
  validate_prime_power(q);
  if (t < 1) throw InvalidArgument("mf_log_upper_bound: t must be >= 1");
  MfBoundReport r;
  r.log_t = log_bracket(Rational(t), q);
  r.ceil_log_t = ceil_log(BigInt(t), q);
  r.integer_part = 3 * BigInt(g_e) + conductor_degree;
  r.log_mf_upper = {r.log_t.lower + Rational(r.integer_part), r.log_t.upper + Rational(r.integer_part)};
  r.mf_upper = BigInt(t) * pow(BigInt(q), static_cast<std::uint64_t>(r.integer_part));
  return r;
}

GenusBoundReport genus_lower_bound(std::uint64_t q, const BigInt& m, std::uint64_t t, Parity parity,
                                   unsigned bits) {
  validate_prime_power(q);
  if (m < 1 || t < 1) throw InvalidArgument("genus_lower_bound: m_F and t must be >= 1");
  GenusBoundReport r;
  r.coefficient = parity == Parity::Even ? Rational(1, 4) : Rational(1, 3);
  const Bracket lm = log_bracket(Rational(m), q, bits);
  const Bracket lt = log_bracket(Rational(t), q, bits);
  const Rational cm = r.coefficient * Rational(m);
  const Rational tail = Rational(1 - m);
  r.value.lower = cm * (lm.lower - lt.upper) + tail;
  r.value.upper = cm * (lm.upper - lt.lower) + tail;
  return r;
}

std::optional<std::string> decimal_digits(const Bracket& b, unsigned digits) {
  const BigInt scale = pow_u64(10, digits);
  const BigInt lo = floor(b.lower * Rational(scale));
  const BigInt hi = floor(b.upper * Rational(scale));
  if (lo != hi && !b.exact()) return std::nullopt;
  const bool negative = lo < 0;
  const BigInt mag = negative ? BigInt(-lo) : lo;
  std::string frac = to_string(BigInt(mag % scale));
  if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
  std::string out = (negative ? "-" : "") + to_string(BigInt(mag / scale));
  if (digits > 0) out += "." + frac;
  return out;
}

std::vector<RatioRow> mq_ratio_sequence(std::uint64_t q, Family family,
                                        const std::vector<std::pair<std::uint64_t, std::uint64_t>>& indices,
                                        unsigned precision) {
  validate_prime_power(q);
  if (indices.empty()) throw InvalidArgument("mq_ratio_sequence: empty range");
  std::vector<RatioRow> rows;
  rows.reserve(indices.size());
  for (auto [d, n] : indices) {
    RatioRow row;
    row.d = d;
    row.n = family == Family::VaryD ? 1 : n;
    const BigInt qd1 = pow_u64(q, d) - 1;
    GenusResult genus;
    if (family == Family::VaryD) {
      row.m = qd1;
      genus = example31_genus(q, d);
    } else {
      row.m = qd1 * pow_u64(q, (row.n - 1) * d);
      genus = example32_genus(q, d, row.n);
    }
    row.g = genus.g;
    if (row.g <= 0) {
      row.note = "g<=0";
      rows.push_back(std::move(row));
      continue;
    }
    // Width of log_q m shrinks by 2^-bits; the ratio amplifies it by m/g.
    for (unsigned bits = 4 * precision + 64;; bits *= 2) {
      const Bracket lm = log_bracket(Rational(row.m), q, bits);
      const Rational factor(row.m, row.g);
      Bracket ratio{factor * lm.lower, factor * lm.upper};
      if (auto text = decimal_digits(ratio, precision)) {
        row.ratio = ratio;
        row.ratio_text = *text;
        break;
      }
      if (bits > (1U << 16)) throw InvariantViolation("mq_ratio_sequence: ratio digits did not stabilise");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BigInt hasse_weil_class_bound(std::uint64_t q, std::uint64_t g) {
  validate_prime_power(q);
  // (1 + sqrt q)^2 = (1 + q) + 2 sqrt q
  const BigInt bq = q;
  BigInt a = 1, b = 0;
  const BigInt ba = 1 + bq, bb = 2;
  for (std::uint64_t i = 0; i < g; ++i) {
    BigInt na = a * ba + b * bb * bq;
    BigInt nb = a * bb + b * ba;
    a = std::move(na);
    b = std::move(nb);
  }
  return a + isqrt_ceil(b * b * bq);
}

}  // namespace ffa
