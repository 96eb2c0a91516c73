#pragma once

// Quantitative bounds for abelian automorphism groups: the explicit
// Chebotarev bound, the splitting-place inequalities, the m_F and genus
// bounds, and the m log_q m / g estimator sequences.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffa/bigint.hpp"
#include "ffa/bracket.hpp"

namespace ffa {

// Least t with q^t >= g^6 q^18.
std::uint64_t t_of(std::uint64_t q, std::uint64_t g);

struct TOfReport {
  std::uint64_t t = 0;
  std::int64_t naive_float = 0;  // ceil(6 log g / log q + 18) in double precision
  bool differs_from_naive() const { return naive_float != static_cast<std::int64_t>(t); }
};
TOfReport t_of_report(std::uint64_t q, std::uint64_t g);

struct ChebotarevParams {
  std::uint64_t q = 2;
  std::uint64_t k = 1;
  std::uint64_t m = 1;
  std::uint64_t g_f = 0;
  std::uint64_t g_e = 0;
  std::uint64_t d = 1;
  std::uint64_t conj_size = 1;

  void validate() const;
};

struct ChebotarevBound {
  Rational main_term;    // (|C|/(km)) q^k
  Rational error_upper;  // error term with q^{k/2}, q^{k/4} rounded up
  Rational lower;        // main_term - error_upper
  bool exact_powers = false;
};

ChebotarevBound chebotarev_lower(const ChebotarevParams& params, unsigned bits = 64);

struct InequalityCheck {
  std::string name;
  Rational lhs;  // upper bound for the left-hand side
  Rational rhs;
  bool strict = false;
  bool holds = false;
};

struct FeasibilityReport {
  std::uint64_t q = 0;
  std::uint64_t g = 0;
  std::uint64_t t = 0;
  std::uint64_t m = 0;  // 4g + 4
  std::uint64_t d = 0;  // (2g + 1) t
  std::array<InequalityCheck, 4> checks;
  bool feasible = false;
};

// With g_E = g_F = g, m_F = 4g+4 and d = (2g+1)t:
//   8(m+g) q^{t/2} <= q^t
//   m(2g+1) q^{t/4} <= q^t / (4 m t)
//   g < q^t / (4 m t)
//   d m <= q^t / (4 m t)
FeasibilityReport splitting_place_feasible(std::uint64_t q, std::uint64_t g,
                                           std::optional<std::uint64_t> t_override = std::nullopt);

struct MfBoundReport {
  Bracket log_t;                // log_q t
  std::uint64_t ceil_log_t = 0;
  BigInt integer_part;          // 3 g_E + conductor degree
  Bracket log_mf_upper;         // log_q t + integer_part
  BigInt mf_upper;              // t q^{integer_part}
};

MfBoundReport mf_log_upper_bound(std::uint64_t q, std::uint64_t t, std::uint64_t g_e,
                                 std::uint64_t conductor_degree);

enum class Parity { Even, Odd };

struct GenusBoundReport {
  Rational coefficient;  // 1/4 or 1/3
  Bracket value;         // c m log_q m - c m log_q t - m + 1
};

GenusBoundReport genus_lower_bound(std::uint64_t q, const BigInt& m, std::uint64_t t, Parity parity,
                                   unsigned bits = 64);

enum class Family { VaryD = 1, VaryN = 2 };

struct RatioRow {
  std::uint64_t d = 0;
  std::uint64_t n = 1;
  BigInt m;
  BigInt g;
  std::optional<Bracket> ratio;  // m log_q m / g
  std::string ratio_text;        // truncated decimal with `precision` digits
  std::string note;
};

// Family VaryD: n = 1, m = q^d - 1. Family VaryN: m = (q^d - 1) q^{(n-1)d}.
// The index list holds (d, n) pairs in emission order.
std::vector<RatioRow> mq_ratio_sequence(std::uint64_t q, Family family,
                                        const std::vector<std::pair<std::uint64_t, std::uint64_t>>& indices,
                                        unsigned precision = 20);

// Truncated decimal of a value known to lie in b, with `digits` fractional
// digits; nullopt if the bracket is too wide to decide them.
std::optional<std::string> decimal_digits(const Bracket& b, unsigned digits);

// a + ceil(b sqrt q) where (1 + sqrt q)^{2g} = a + b sqrt q.
BigInt hasse_weil_class_bound(std::uint64_t q, std::uint64_t g);

}  // namespace ffa
