#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "ffa/asymptotics.hpp"
#include "ffa/error.hpp"
#include "ffa/genus.hpp"

using namespace ffa;

namespace {

using Dec = boost::multiprecision::cpp_dec_float_50;

Dec to_dec(const Rational& r) {
  return Dec(boost::multiprecision::numerator(r).str()) / Dec(boost::multiprecision::denominator(r).str());
}

bool contains(const Bracket& b, const Dec& x) { return to_dec(b.lower) <= x && x <= to_dec(b.upper); }

std::uint64_t least_exponent(std::uint64_t q, const BigInt& n) {
  std::uint64_t u = 0;
  BigInt acc = 1;
  while (acc < n) {
    acc *= q;
    ++u;
  }
  return u;
}

}  // namespace

TEST_CASE("t_of is the least t with q^t >= g^6 q^18") {
  CHECK(t_of(2, 2) == 24);
  CHECK(t_of(2, 3) == 28);
  CHECK(t_of(9, 9) == 24);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
    for (std::uint64_t g : {2, 3, 10, 64, 99, 1000, 4096, 99999}) {
      BigInt g6 = 1;
      for (int i = 0; i < 6; ++i) g6 *= g;
      CHECK(t_of(q, g) == 18 + least_exponent(q, g6));
    }
  }
  CHECK_THROWS_AS(t_of(2, 1), InvalidArgument);
  CHECK_FALSE(t_of_report(2, 2).differs_from_naive());
}

TEST_CASE("brackets contain the true value and shrink") {
  for (std::uint64_t q : {2, 3, 5, 8}) {
    for (std::uint64_t k = 1; k <= 9; ++k) {
      const Dec half = pow(Dec(q), Dec(k) / 2);
      const Dec quarter = pow(Dec(q), Dec(k) / 4);
      Rational prev_width = -1;
      for (unsigned bits : {16U, 32U, 64U, 128U}) {
        const Bracket h = pow_half(q, k, bits);
        CHECK(contains(h, half));
        CHECK(contains(pow_quarter(q, k, bits), quarter));
        if (prev_width >= 0) CHECK(h.width() <= prev_width);
        prev_width = h.width();
      }
      if (k % 2 == 0) CHECK(pow_half(q, k).exact());
      if (k % 4 == 0) CHECK(pow_quarter(q, k).exact());
    }
    for (std::int64_t n : {1, 2, 7, 24, 1000}) {
      const Dec truth = log(Dec(n)) / log(Dec(q));
      Rational prev_width = -1;
      for (unsigned bits : {16U, 32U, 64U, 128U}) {
        const Bracket b = log_bracket(Rational(n), q, bits);
        CHECK(contains(b, truth));
        if (prev_width >= 0) CHECK(b.width() <= prev_width);
        prev_width = b.width();
      }
      CHECK(contains(log_bracket(Rational(1, n), q), -truth));
    }
  }
  CHECK(log_bracket(Rational(81), 3).exact());
  CHECK(log_bracket(Rational(81), 3).lower == 4);
  CHECK(contains(sqrt_bracket(Rational(1, 2)), sqrt(Dec(1) / 2)));
  CHECK(ceil_log(1, 2) == 0);
  CHECK(ceil_log(1025, 2) == 11);
  CHECK(ceil_log(1024, 2) == 10);
}

TEST_CASE("Chebotarev lower bound") {
  ChebotarevParams p{2, 24, 12, 2, 0, 25, 1};
  const auto big = chebotarev_lower(p);
  CHECK(big.lower > 0);
  CHECK(big.exact_powers);
  CHECK(big.main_term == Rational(BigInt(1) << 24, 24 * 12));
  p.k = 4;
  CHECK(chebotarev_lower(p).lower < 0);

  ChebotarevParams id{3, 1, 1, 0, 0, 1, 1};
  const auto b = chebotarev_lower(id);
  CHECK(b.main_term == 3);
  CHECK_FALSE(b.exact_powers);
  // 3 - 2*sqrt3 - 3^{1/4} - 1, rounded against the bound
  const Dec truth = Dec(3) - 2 * sqrt(Dec(3)) - pow(Dec(3), Dec(1) / 4) - 1;
  CHECK(to_dec(b.lower) <= truth);
  CHECK(truth - to_dec(b.lower) < Dec("1e-15"));

  // increasing in k once positive
  ChebotarevParams m{2, 1, 12, 2, 0, 25, 1};
  Rational prev = 0;
  bool positive = false;
  for (std::uint64_t k = 1; k <= 60; ++k) {
    m.k = k;
    const Rational v = chebotarev_lower(m).lower;
    if (positive) CHECK(v > prev);
    positive = positive || v > 0;
    prev = v;
  }
  CHECK(positive);

  ChebotarevParams bad{2, 1, 2, 0, 0, 1, 3};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  CHECK_THROWS_AS(chebotarev_lower(ChebotarevParams{6, 1, 1, 0, 0, 1, 1}), InvalidArgument);
}

TEST_CASE("splitting-place feasibility") {
  const auto a = splitting_place_feasible(2, 2);
  CHECK(a.t == 24);
  CHECK(a.m == 12);
  CHECK(a.d == 5 * 24);
  CHECK(a.feasible);
  for (const auto& c : a.checks) CHECK(c.holds);
  CHECK(splitting_place_feasible(5, 100).feasible);
  const auto small = splitting_place_feasible(2, 2, 4);
  CHECK_FALSE(small.feasible);
  bool some_fail = false;
  for (const auto& c : small.checks) some_fail = some_fail || !c.holds;
  CHECK(some_fail);
  CHECK(a.checks[2].strict);
  CHECK_THROWS_AS(splitting_place_feasible(2, 1), InvalidArgument);
}

TEST_CASE("m_F upper bound") {
  const auto one = mf_log_upper_bound(2, 1, 0, 0);
  CHECK(one.log_mf_upper.exact());
  CHECK(one.log_mf_upper.upper == 0);
  CHECK(one.mf_upper == 1);
  const auto b = mf_log_upper_bound(2, 24, 0, 5);
  CHECK(b.ceil_log_t == 5);
  CHECK(b.integer_part == 5);
  CHECK(b.mf_upper == 24 * 32);
  CHECK(contains(b.log_mf_upper, log(Dec(24)) / log(Dec(2)) + 5));
  const auto c = mf_log_upper_bound(3, 10, 2, 3);
  CHECK(c.integer_part == 9);
  CHECK(c.ceil_log_t == 3);
  CHECK(contains(c.log_t, log(Dec(10)) / log(Dec(3))));
  CHECK_THROWS_AS(mf_log_upper_bound(3, 0, 2, 3), InvalidArgument);
}

TEST_CASE("genus lower bounds") {
  const auto triv = genus_lower_bound(5, 1, 1, Parity::Odd);
  CHECK(triv.value.exact());
  CHECK(triv.value.lower == 0);
  // m = 1 leaves only the t term
  CHECK(contains(genus_lower_bound(5, 1, 7, Parity::Odd).value, -log(Dec(7)) / log(Dec(5)) / 3));
  const auto odd = genus_lower_bound(3, 81, 3, Parity::Odd);
  CHECK(odd.coefficient == Rational(1, 3));
  CHECK(odd.value.exact());
  CHECK(odd.value.lower == 1);
  const auto even = genus_lower_bound(2, 64, 4, Parity::Even);
  CHECK(even.coefficient == Rational(1, 4));
  CHECK(even.value.exact());
  CHECK(even.value.lower == 1);
}

TEST_CASE("genus lower bound never exceeds the true genus") {
  for (std::uint64_t q : {2, 3}) {
    for (std::uint64_t d = 1; d <= 12; ++d) {
      const BigInt g = example31_genus(q, d).g;
      if (g < 2) continue;
      BigInt m = 1;
      for (std::uint64_t i = 0; i < d; ++i) m *= q;
      m -= 1;
      const auto t = t_of(q, g.convert_to<std::uint64_t>());
      const auto r = genus_lower_bound(q, m, t, q == 2 ? Parity::Even : Parity::Odd);
      CHECK(r.value.upper <= Rational(g));
    }
  }
}

TEST_CASE("ratio sequence") {
  const auto rows = mq_ratio_sequence(2, Family::VaryD, {{1, 1}, {10, 1}, {200, 1}});
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].ratio.has_value());
  CHECK(rows[0].note == "g<=0");
  CHECK(rows[1].m == 1023);
  CHECK(rows[1].g == 4088);
  const Dec truth = Dec(1023) * log(Dec(1023)) / log(Dec(2)) / 4088;
  CHECK(contains(*rows[1].ratio, truth));
  CHECK(rows[1].ratio_text.substr(0, 12) == "2.5020934465");
  CHECK(rows[1].ratio_text.size() == 22);
  CHECK(rows[2].ratio->lower > 2);
  CHECK(rows[2].ratio->upper < Rational(21, 10));
  const auto again = mq_ratio_sequence(2, Family::VaryD, {{10, 1}});
  CHECK(again[0].ratio_text == rows[1].ratio_text);

  const auto fam2 = mq_ratio_sequence(3, Family::VaryN, {{1, 2}, {1, 5}, {1, 40}});
  CHECK(fam2[0].m == 6);
  CHECK(fam2[0].g == 1);
  for (std::size_t i = 1; i < fam2.size(); ++i) CHECK(fam2[i].ratio->upper < fam2[i - 1].ratio->lower);
  CHECK(fam2.back().ratio->lower > 2);
}

TEST_CASE("decimal digits") {
  CHECK(decimal_digits({Rational(1, 3), Rational(1, 3)}, 4) == std::optional<std::string>("0.3333"));
  CHECK(decimal_digits({Rational(-5, 2), Rational(-5, 2)}, 1) == std::optional<std::string>("-2.5"));
  CHECK_FALSE(decimal_digits({Rational(0), Rational(1)}, 3).has_value());
}

TEST_CASE("class number bound") {
  CHECK(hasse_weil_class_bound(7, 0) == 1);
  CHECK(hasse_weil_class_bound(4, 1) == 9);
  CHECK(hasse_weil_class_bound(2, 1) == 6);
  for (std::uint64_t q : {2, 3, 5}) {
    for (std::uint64_t g = 1; g <= 6; ++g) {
      const Dec v = pow(1 + sqrt(Dec(q)), 2 * g);
      CHECK(hasse_weil_class_bound(q, g) == BigInt(Dec(ceil(v)).convert_to<std::int64_t>()));
    }
  }
}
