#include "ffa/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ffa/error.hpp"

namespace ffa {

namespace {

Poly one_of(const Field& f) { return Poly::constant(f, f.one()); }

Poly pth_root(const Poly& a) {
  const Field& f = a.field();
  const auto p = f.characteristic();
  std::vector<Fe> out;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) out.push_back(f.pth_root(a.coeffs()[i]));
  return Poly(f, std::move(out));
}

void squarefree(const Poly& f, std::size_t scale_mult, std::vector<Factor>& out) {
  if (f.is_constant()) return;
  const Field& field = f.field();
  Poly c = gcd(f, derivative(f));
  Poly w = f / c;
  std::size_t i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_constant()) out.push_back({make_monic(fac), i * scale_mult});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_constant()) squarefree(make_monic(pth_root(c)), scale_mult * field.characteristic(), out);
}

struct DegreePart {
  Poly product;  // product of all irreducible factors of this degree
  std::size_t degree;
};

std::vector<DegreePart> distinct_degree(Poly f) {
  std::vector<DegreePart> out;
  const Field& field = f.field();
  const Poly x = Poly::x(field);
  Poly h = x % f;
  for (std::size_t d = 1; 2 * d <= *f.degree(); ++d) {
    h = powmod(h, field.size(), f);
    Poly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
  }
  if (!f.is_constant()) out.push_back({make_monic(f), *f.degree()});
  return out;
}

Poly random_poly(const Field& field, std::size_t below_degree, std::mt19937_64& rng) {
  std::vector<Fe> c(below_degree);
  for (auto& v : c) v = Fe{rng() % field.size()};
  return Poly(field, std::move(c));
}

// Splitting polynomial whose gcd with f separates roots into two halves.
Poly splitter(const Poly& a, const Poly& f, std::size_t d) {
  const Field& field = f.field();
  if (field.characteristic() == 2) {
    // Absolute trace F_{q^d} -> F_2: sum of a^{2^i}, i < s*d.
    Poly t = a % f;
    Poly acc = t;
    const std::size_t terms = static_cast<std::size_t>(field.degree()) * d;
    for (std::size_t i = 1; i < terms; ++i) {
      t = mulmod(t, t, f);
      acc = acc + t;
    }
    return acc;
  }
  // a^{(q^d-1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}
  Poly norm = a % f;
  Poly t = norm;
  for (std::size_t i = 1; i < d; ++i) {
    t = powmod(t, field.size(), f);
    norm = mulmod(norm, t, f);
  }
  return powmod(norm, (field.size() - 1) / 2, f) - one_of(field);
}

void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = *f.degree();
  if (n == d) {
    out.push_back(make_monic(f));
    return;
  }
  for (;;) {
    Poly a = random_poly(f.field(), n, rng);
    if (a.is_constant()) continue;
    Poly g = gcd(f, splitter(a, f, d));
    if (g.is_constant() || *g.degree() == n) continue;
    equal_degree(g, d, rng, out);
    equal_degree(f / g, d, rng, out);
    return;
  }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Poly frobenius_power_of_x(const Poly& f, std::uint64_t k) {
  Poly h = Poly::x(f.field()) % f;
  for (std::uint64_t i = 0; i < k; ++i) h = powmod(h, f.field().size(), f);
  return h;
}

std::vector<Factor> factorize(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidArgument("factorize: zero polynomial");
  std::vector<Factor> sqf;
  squarefree(make_monic(f), 1, sqf);
  std::mt19937_64 rng(seed);
  std::map<std::vector<Fe>, Factor> merged;
  for (const auto& part : sqf) {
    for (const auto& dd : distinct_degree(part.poly)) {
      std::vector<Poly> irreducibles;
      equal_degree(dd.product, dd.degree, rng, irreducibles);
      for (auto& g : irreducibles) {
        auto [it, inserted] = merged.try_emplace(g.coeffs(), Factor{g, 0});
        it->second.multiplicity += part.multiplicity;
      }
    }
  }
  std::vector<Factor> out;
  for (auto& [key, fac] : merged) out.push_back(std::move(fac));
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("is_irreducible: zero polynomial");
  if (f.is_constant()) return false;
  const std::uint64_t n = *f.degree();
  if (n == 1) return true;
  const Poly g = make_monic(f);
  const Poly x = Poly::x(f.field());
  if (!(frobenius_power_of_x(g, n) == x % g)) return false;
  for (auto l : prime_divisors(n)) {
    if (!gcd(frobenius_power_of_x(g, n / l) - x, g).is_one()) return false;
  }
  return true;
}

std::vector<Fe> roots(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidArgument("roots: zero polynomial");
  std::vector<Fe> out;
  if (f.is_constant()) return out;
  const Field& field = f.field();
  const Poly monic = make_monic(f);
  Poly split = gcd(monic, frobenius_power_of_x(monic, 1) - Poly::x(field));
  if (split.is_constant()) return out;
  std::mt19937_64 rng(seed);
  std::vector<Poly> linear;
  equal_degree(split, 1, rng, linear);
  for (const auto& l : linear) out.push_back(field.neg(l.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> roots_in(const Poly& f, const Field& k) {
  if (f.is_zero()) throw InvalidArgument("roots_in: zero polynomial");
  Embedding emb(f.field(), k);
  std::vector<FieldElement> out;
  for (auto r : roots(emb.map(f))) out.push_back({k, r});
  return out;
}

std::uint64_t count_roots_in_ext(const Poly& f, std::uint64_t m) {
  if (f.is_zero()) throw InvalidArgument("count_roots_in_ext: zero polynomial");
  if (m == 0) throw InvalidArgument("count_roots_in_ext: extension degree must be >= 1");
  if (f.is_constant()) return 0;
  const Poly monic = make_monic(f);
  Poly g = gcd(monic, frobenius_power_of_x(monic, m) - Poly::x(f.field()));
  return *g.degree();
}

}  // namespace ffa
