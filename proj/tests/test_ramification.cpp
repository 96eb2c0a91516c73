#include <doctest.h>

#include "ffa/error.hpp"
#include "ffa/ramification.hpp"

using namespace ffa;

namespace {

RamFiltration F(std::uint64_t p, std::vector<std::uint64_t> g) { return RamFiltration(p, std::move(g)); }

// phi as the integral of |G_t| / |G_0|, one unit interval at a time.
Rational phi_by_integration(const RamFiltration& f, const Rational& x) {
  if (x <= 0) return x;
  Rational total = 0;
  Rational t = 0;
  const Rational g0 = f.ramification_index();
  while (t < x) {
    // G_t for t in (i, i+1] is G_{i+1}
    const BigInt i = ffa::floor(t);
    const Rational end = std::min(Rational(i + 1), x);
    total += (end - t) * Rational(f.order_at(static_cast<std::size_t>(i + 1))) / g0;
    t = end;
  }
  return total;
}

}  // namespace

TEST_CASE("validation of filtrations") {
  CHECK_NOTHROW(F(3, {}));
  CHECK_NOTHROW(F(3, {5}));
  CHECK_NOTHROW(F(3, {6, 3, 3}));
  CHECK_THROWS_AS(F(3, {6, 3, 9}), InvalidArgument);   // not a chain
  CHECK_THROWS_AS(F(3, {6, 2}), InvalidArgument);      // not a p-group
  CHECK_THROWS_AS(F(3, {9}), InvalidArgument);         // wild index needs g_1
  CHECK_THROWS_AS(F(3, {18, 3}), InvalidArgument);     // g_1 must be the p-part
  CHECK_THROWS_AS(F(3, {3, 1}), InvalidArgument);      // trivial groups are implicit
  CHECK_THROWS_AS(F(4, {2}), InvalidArgument);
  CHECK(RamFiltration::parse("6,3,3", 3) == F(3, {6, 3, 3}));
  CHECK(RamFiltration::parse(" 6, 3 ,3", 3).to_string() == "6,3,3");
  CHECK(RamFiltration::parse("", 3).is_unramified());
  CHECK_THROWS_AS(RamFiltration::parse("6,,3", 3), InvalidArgument);
  CHECK_THROWS_AS(RamFiltration::parse("6,x", 3), InvalidArgument);
}

TEST_CASE("different exponent") {
  CHECK(different_exponent(F(5, {5, 5})) == 8);
  CHECK(different_exponent(F(7, {5})) == 4);
  CHECK(different_exponent(F(3, {3, 3})) == 4);
  CHECK(different_exponent(F(3, {6, 3, 3})) == 9);
  CHECK(different_exponent(F(3, {})) == 0);
}

TEST_CASE("Herbrand phi and psi") {
  CHECK(phi_herbrand(F(3, {3, 3}), 0) == 0);
  CHECK(phi_herbrand(F(3, {3, 3}), 1) == 1);
  CHECK(phi_herbrand(F(3, {6, 3, 3}), 2) == 1);
  CHECK(phi_herbrand(F(3, {6, 3, 3}), Rational(-1, 2)) == Rational(-1, 2));
  CHECK(phi_herbrand(F(3, {6, 3, 3}), Rational(5, 2)) == Rational(1) + Rational(1, 12));
  CHECK_THROWS_AS(phi_herbrand(F(3, {3, 3}), Rational(-3, 2)), InvalidArgument);
  for (const auto& f : {F(3, {6, 3, 3}), F(2, {4, 4, 2}), F(5, {4}), F(3, {9, 9, 3, 3}), F(2, {})}) {
    Rational prev = -1;
    Rational prev_slope = 2;
    for (int k = -4; k <= 24; ++k) {
      const Rational x(k, 4);
      const Rational v = phi_herbrand(f, x);
      CHECK(v == phi_by_integration(f, x));
      CHECK(psi_herbrand(f, v) == x);
      if (k > -4) {
        CHECK(v > prev);
        const Rational slope = (v - prev) * 4;
        CHECK(slope <= prev_slope);  // concave
        prev_slope = slope;
      }
      prev = v;
    }
  }
}

TEST_CASE("conductor exponent") {
  CHECK(conductor_exponent(F(3, {})) == 0);
  CHECK(conductor_exponent(F(7, {5})) == 1);
  CHECK(conductor_exponent(F(3, {3, 3})) == 2);
  CHECK(conductor_exponent(F(3, {6, 3, 3})) == 2);
  CHECK(conductor_via_identity(F(7, {5})) == 1);
  CHECK(conductor_via_identity(F(3, {3, 3})) == 2);
  CHECK(conductor_via_identity(F(3, {6, 3, 3})) == 2);
  CHECK_THROWS_AS(conductor_via_identity(F(3, {})), InvalidArgument);
  // with integral upper jumps, c >= 2 exactly when wild
  CHECK(conductor_exponent(F(3, {6, 3})) == 1);
  for (const auto& f : {F(3, {6, 3, 3}), F(2, {2, 2, 2}), F(5, {4}), F(3, {})}) {
    CHECK((conductor_exponent(f) >= 2) == f.is_wild());
  }
}

TEST_CASE("upper jumps and Hasse-Arf") {
  const auto jumps = upper_jumps(F(2, {4, 4, 2}));
  REQUIRE(jumps.size() == 2);
  CHECK(jumps[0] == 1);
  CHECK(jumps[1] == Rational(3, 2));
  CHECK_FALSE(satisfies_hasse_arf(F(2, {4, 4, 2})));
  CHECK(satisfies_hasse_arf(F(2, {4, 4, 2, 2})));
  CHECK(satisfies_hasse_arf(F(3, {6, 3, 3})));
}

TEST_CASE("lemma bound values") {
  CHECK(abelian_different_lower_bound(2, 1, 3, 1) == 4);
  CHECK(abelian_different_lower_bound(2, 2, 3, 1) == 9);
  CHECK(abelian_different_lower_bound(3, 1, 5, 1) == 12);
  CHECK_THROWS_AS(abelian_different_lower_bound(1, 1, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(abelian_different_lower_bound(2, 3, 3, 1), InvalidArgument);
}

TEST_CASE("lemma bound is tight at (3,1,5,1)") {
  std::uint64_t best = UINT64_MAX;
  for (const auto& f : enumerate_filtrations(1, 5, 1, 6)) {
    if (conductor_exponent(f) == 3) best = std::min(best, different_exponent(f));
  }
  CHECK(best == 12);
  CHECK(different_exponent(F(5, {5, 5, 5})) == 12);
  CHECK(conductor_exponent(F(5, {5, 5, 5})) == 3);
}

TEST_CASE("enumeration") {
  auto a = enumerate_filtrations(1, 3, 1, 2);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == F(3, {3, 3}));
  CHECK(a[1] == F(3, {3, 3, 3}));
  CHECK(enumerate_filtrations(2, 3, 1, 1).empty());
  auto b = enumerate_filtrations(1, 2, 2, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == F(2, {4, 4}));
  CHECK(b[1] == F(2, {4, 4, 2}));
  auto ha = enumerate_filtrations(1, 2, 2, 3, Admissibility::HasseArf);
  for (const auto& f : ha) CHECK(satisfies_hasse_arf(f));
  // (n1, n2) in [1,3] x [0,3]; the jumps n1 and n1 + n2/2 force n2 even
  CHECK(ha.size() == 3 * 2);
  CHECK_THROWS_AS(enumerate_filtrations(3, 3, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(enumerate_filtrations(1, 3, 0, 2), InvalidArgument);
}

TEST_CASE("ramification invariants over an enumerated family") {
  for (std::uint64_t p : {2, 3}) {
    for (std::uint64_t b : {1, 2, 4}) {
      if (b % p == 0) continue;
      for (std::uint64_t w : {1, 2}) {
        for (const auto& f : enumerate_filtrations(b, p, w, 4)) {
          const auto d = different_exponent(f);
          const auto c = conductor_exponent(f);
          CHECK(d >= f.length());
          CHECK(Rational(c) <= Rational(2 * d, f.ramification_index()));
          if (satisfies_hasse_arf(f)) CHECK(Rational(c) == conductor_via_identity(f));
          if (c >= 2) CHECK(BigInt(d) >= abelian_different_lower_bound(c, b, p, w));
        }
      }
    }
  }
}
