#include <doctest.h>

#include <random>

#include "ffa/error.hpp"
#include "ffa/factor.hpp"
#include "ffa/polyparse.hpp"

using namespace ffa;

namespace {

Poly random_poly(const Field& f, std::size_t deg, std::mt19937_64& rng) {
  std::vector<Fe> c(deg + 1);
  for (auto& v : c) v = Fe{rng() % f.size()};
  if (c.back().code == 0) c.back() = f.one();
  return Poly(f, c);
}

std::uint64_t brute_root_count(const Poly& f, const Field& ext) {
  Embedding e(f.field(), ext);
  const Poly g = e.map(f);
  std::uint64_t n = 0;
  for (std::uint64_t a = 0; a < ext.size(); ++a) n += g(Fe{a}) == ext.zero();
  return n;
}

}  // namespace

TEST_CASE("polynomial ring basics") {
  const Field f = make_field(5, 1);
  const Poly a = Poly::from_ints(f, {1, 2, 3});
  const Poly b = Poly::from_ints(f, {4, 0, 1});
  CHECK(a + b == Poly::from_ints(f, {0, 2, 4}));
  CHECK(a * b == Poly::from_ints(f, {4, 8, 13, 2, 3}));
  CHECK((a - a).is_zero());
  CHECK_FALSE((a - a).degree().has_value());
  const auto [qu, re] = divmod(a * b + Poly::from_ints(f, {1}), b);
  CHECK(qu == a);
  CHECK(re == Poly::from_ints(f, {1}));
  CHECK(derivative(a) == Poly::from_ints(f, {2, 6}));
  CHECK(a(Fe{2}).code == (1 + 4 + 12) % 5);
  CHECK(inflate(a, 3) == Poly::from_ints(f, {1, 0, 0, 2, 0, 0, 3}));
  CHECK_THROWS_AS(divmod(a, Poly(f)), InvalidArgument);
}

TEST_CASE("gcd and extended gcd") {
  const Field f = make_field(3, 2);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Poly common = random_poly(f, 2, rng);
    const Poly a = common * random_poly(f, 3, rng);
    const Poly b = common * random_poly(f, 4, rng);
    const auto eg = extended_gcd(a, b);
    CHECK(eg.gcd.is_monic());
    CHECK((a % eg.gcd).is_zero());
    CHECK((b % eg.gcd).is_zero());
    CHECK((eg.gcd % common).is_zero());
    CHECK(eg.s * a + eg.t * b == eg.gcd);
    CHECK(gcd(a, b) == eg.gcd);
  }
}

TEST_CASE("powmod and invmod") {
  const Field f = make_field(2, 3);
  const Poly m = parse_poly("x^5 + x^2 + 1", f);
  const Poly a = parse_poly("x^3 + [1,0,1]*x + [0,1,0]", f);
  Poly acc = Poly::constant(f, f.one());
  for (int i = 0; i < 13; ++i) acc = mulmod(acc, a, m);
  CHECK(powmod(a, 13, m) == acc);
  CHECK(mulmod(invmod(a, m), a, m).is_one());
}

TEST_CASE("factorize round-trips and factors are irreducible") {
  std::mt19937_64 rng(2024);
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {2, 3}}) {
    const Field f = make_field(p, s);
    for (int i = 0; i < 40; ++i) {
      Poly g = random_poly(f, 1 + rng() % 12, rng);
      if (i % 4 == 0) g = g * g;  // repeated factors
      if (i % 8 == 0 && p <= 3) g = inflate(g, p);  // inseparable shape
      const auto facs = factorize(g);
      Poly prod = Poly::constant(f, g.lead());
      for (const auto& fac : facs) {
        CHECK(fac.poly.is_monic());
        CHECK(is_irreducible(fac.poly));
        prod = prod * pow(fac.poly, fac.multiplicity);
      }
      CHECK(prod == g);
      for (std::size_t j = 1; j < facs.size(); ++j) CHECK(canonical_less(facs[j - 1].poly, facs[j].poly));
    }
  }
}

TEST_CASE("irreducibility agrees with the count of monic irreducibles") {
  // number of monic irreducibles of degree n over F_q: (1/n) sum mu(d) q^{n/d}
  const Field f = make_field(2, 1);
  const std::vector<std::uint64_t> expected{0, 2, 1, 2, 3, 6, 9};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (1ULL << n); ++code) {
      std::vector<Fe> c(n + 1);
      for (std::size_t i = 0; i < n; ++i) c[i] = Fe{(code >> i) & 1U};
      c[n] = f.one();
      count += is_irreducible(Poly(f, c));
    }
    CHECK(count == expected[n]);
  }
  const Field f9 = make_field(3, 2);
  std::uint64_t quad = 0;
  for (std::uint64_t a = 0; a < 9; ++a) {
    for (std::uint64_t b = 0; b < 9; ++b) quad += is_irreducible(Poly(f9, {Fe{a}, Fe{b}, f9.one()}));
  }
  CHECK(quad == (81 - 9) / 2);
}

TEST_CASE("roots and root counts match exhaustion") {
  std::mt19937_64 rng(7);
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const Field f = make_field(p, s);
    for (int i = 0; i < 30; ++i) {
      const Poly g = random_poly(f, 1 + rng() % 8, rng);
      const auto rs = roots(g);
      std::vector<Fe> brute;
      for (std::uint64_t a = 0; a < f.size(); ++a) {
        if (g(Fe{a}) == f.zero()) brute.push_back(Fe{a});
      }
      CHECK(rs == brute);
      for (std::uint64_t m = 1; m <= 4; ++m) {
        if (pow_u64(f.size(), m) > 4096) break;
        const Field ext = make_field(p, s * static_cast<unsigned>(m));
        CHECK(count_roots_in_ext(g, m) == brute_root_count(g, ext));
      }
    }
  }
  const Field f = make_field(3, 1);
  CHECK_THROWS_AS(count_roots_in_ext(Poly(f), 1), InvalidArgument);
  CHECK_THROWS_AS(count_roots_in_ext(Poly::x(f), 0), InvalidArgument);
  CHECK(count_roots_in_ext(Poly::constant(f, f.one()), 2) == 0);
}

TEST_CASE("roots in an extension") {
  const Field f = make_field(3, 1);
  const Field k = make_field(3, 2);
  const auto rs = roots_in(Poly::from_ints(f, {1, 0, 1}), k);
  REQUIRE(rs.size() == 2);
  for (const auto& r : rs) CHECK(k.mul(r.value, r.value) == k.from_int(-1));
}

TEST_CASE("polynomial text round-trip") {
  const Field f = make_field(3, 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Poly g = random_poly(f, rng() % 6, rng);
    CHECK(parse_poly(g.to_string(), f) == g);
    CHECK(parse_poly(g.to_string('T'), f) == g);
  }
  const Field p5 = make_field(5, 1);
  CHECK(parse_poly("X^2 - 3X + 7", p5) == Poly::from_ints(p5, {2, 2, 1}));
  CHECK(Poly::from_ints(p5, {0, 1, 1}).to_string() == "x + x^2");
  CHECK(Poly::from_ints(p5, {4, 3}).to_string() == "4 + 3*x");
  CHECK(Poly(p5).to_string() == "0");
  CHECK_THROWS_AS(parse_poly("x^", p5), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("2 x x", p5), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("", p5), InvalidArgument);
  const auto h = parse_rational_map("(X^2+X+1)/(3X)", p5);
  CHECK(h.den() == Poly::x(p5));
  CHECK(h.num() == Poly::from_ints(p5, {2, 2, 2}));
}
