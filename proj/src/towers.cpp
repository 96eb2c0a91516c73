#include "ffa/towers.hpp"

#include <deque>
#include <numeric>

#include "ffa/error.hpp"
#include "ffa/factor.hpp"

namespace ffa {

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_field(num_, den_);
  if (den_.is_zero()) throw InvalidArgument("rational map with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field(), den_.field().one());
    return;
  }
  const Poly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Fe inv = field().inv(den_.lead());
  num_ = scale(num_, inv);
  den_ = scale(den_, inv);
}

RationalMap RationalMap::polynomial(Poly num) {
  Poly one = Poly::constant(num.field(), num.field().one());
  return RationalMap(std::move(num), std::move(one));
}

std::size_t RationalMap::degree() const {
  return std::max(num_.degree().value_or(0), *den_.degree());
}

std::string RationalMap::to_string(char var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

PointClass PointClass::of(const Poly& irreducible) {
  if (irreducible.is_constant()) throw InvalidArgument("point class needs a nonconstant polynomial");
  if (!is_irreducible(irreducible)) throw InvalidArgument("point class needs an irreducible polynomial");
  return {false, make_monic(irreducible)};
}

std::string PointClass::to_string(char var) const {
  return infinity ? "inf" : min_poly->to_string(var);
}

bool operator<(const PointClass& a, const PointClass& b) {
  if (a.infinity != b.infinity) return b.infinity;
  if (a.infinity) return false;
  return canonical_less(*a.min_poly, *b.min_poly);
}

bool operator==(const PointClass& a, const PointClass& b) {
  if (a.infinity != b.infinity) return false;
  return a.infinity || *a.min_poly == *b.min_poly;
}

ProjPoint representative(const PointClass& cls, const Field& base) {
  if (cls.infinity) return {cls, std::nullopt};
  const Field ext = make_field(base.characteristic(), base.degree() * static_cast<unsigned>(cls.degree()));
  auto rs = roots_in(*cls.min_poly, ext);
  if (rs.empty()) throw InvariantViolation("minimal polynomial has no root in its splitting field");
  return {cls, rs.front()};
}

std::string ProjPoint::to_string() const {
  if (cls.infinity) return "inf";
  return value->to_string();
}

std::uint64_t ClosureSet::degree_sum() const {
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.degree();
  return total;
}

KummerLocus kummer_ramified(std::uint64_t e, const RationalMap& h) {
  const Field& f = h.field();
  if (e < 2) throw InvalidArgument("kummer_ramified: e must be >= 2");
  if (std::gcd(e, f.size()) != 1) throw InvalidArgument("kummer_ramified: wild Kummer step (gcd(e, q) != 1)");
  if (h.is_constant()) throw InvalidArgument("kummer_ramified: constant h");
  KummerLocus out;
  auto record = [&](const PointClass& c, std::int64_t v) {
    if (v % static_cast<std::int64_t>(e) != 0) {
      out.locus.classes.insert(c);
      out.valuations.emplace_back(c, v);
    }
  };
  if (!h.num().is_constant()) {
    for (const auto& fac : factorize(h.num())) record(PointClass::of(fac.poly), static_cast<std::int64_t>(fac.multiplicity));
  }
  if (!h.den().is_constant()) {
    for (const auto& fac : factorize(h.den())) record(PointClass::of(fac.poly), -static_cast<std::int64_t>(fac.multiplicity));
  }
  record(PointClass::at_infinity(),
         static_cast<std::int64_t>(*h.den().degree()) - static_cast<std::int64_t>(*h.num().degree()));
  return out;
}

namespace {

// Elements of K = F_q[Y]/(mu) are polynomials in Y reduced mod mu.
struct ClassValue {
  bool infinity = false;
  Poly value;
};

struct Residue {
  Poly mu;
  std::uint64_t degree;
};

// The residue field of a class; infinity uses K = F_q.
Residue residue_of(const PointClass& c, const Field& f) {
  if (c.infinity) return {Poly::x(f), 1};
  return {*c.min_poly, c.degree()};
}

ClassValue evaluate(const RationalMap& m, const PointClass& beta, const Residue& k) {
  const Field& f = m.field();
  if (beta.infinity) {
    const auto dn = m.num().degree().value_or(0);
    const auto dd = *m.den().degree();
    if (m.num().is_zero() || dn < dd) return {false, Poly(f)};
    if (dn > dd) return {true, Poly(f)};
    return {false, Poly::constant(f, m.num().lead())};
  }
  const Poly den = m.den() % k.mu;
  if (den.is_zero()) return {true, Poly(f)};
  return {false, mulmod(m.num() % k.mu, invmod(den, k.mu), k.mu)};
}

using KPoly = std::vector<Poly>;  // coefficients in K, ascending in X

KPoly kmul(const KPoly& a, const KPoly& b, const Poly& mu) {
  const Field& f = mu.field();
  if (a.empty() || b.empty()) return {};
  KPoly out(a.size() + b.size() - 1, Poly(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], mu)) % mu;
    }
  }
  return out;
}

std::vector<PointClass> classes_of(const Poly& p) {
  std::vector<PointClass> out;
  if (p.is_constant()) return out;
  for (const auto& fac : factorize(p)) out.push_back(PointClass::of(fac.poly));
  return out;
}

}  // namespace

std::vector<PointClass> backward_solutions(const RationalMap& f, const RationalMap& h, const PointClass& beta) {
  if (!(f.field() == h.field())) throw InvalidArgument("backward_solutions: maps over different fields");
  if (f.is_constant() || h.is_constant()) throw InvalidArgument("backward_solutions: constant map");
  const Field& field = h.field();
  const Residue k = residue_of(beta, field);
  const ClassValue c = evaluate(f, beta, k);
  const std::size_t dn = h.num().degree().value_or(0);
  const std::size_t dd = *h.den().degree();

  std::vector<PointClass> out;
  if (c.infinity) {
    out = classes_of(h.den());
    if (dn > dd) out.push_back(PointClass::at_infinity());
    return out;
  }

  // P(X) = num_h(X) - c den_h(X) over K, then its norm to F_q[X].
  KPoly p(std::max(dn, dd) + 1, Poly(field));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Poly a = Poly::constant(field, h.num().coeff(i));
    const Poly b = scale(c.value, h.den().coeff(i));
    p[i] = (a - b) % k.mu;
  }
  KPoly norm = p;
  KPoly conj = p;
  for (std::uint64_t i = 1; i < k.degree; ++i) {
    for (auto& coef : conj) coef = powmod(coef, field.size(), k.mu);
    norm = kmul(norm, conj, k.mu);
  }
  std::vector<Fe> flat;
  for (const auto& coef : norm) {
    if (!coef.is_constant()) throw InvariantViolation("norm polynomial has coefficients outside F_q");
    flat.push_back(coef.coeff(0));
  }
  out = classes_of(Poly(field, std::move(flat)));

  bool infinite_solution = false;
  if (dn == dd) {
    infinite_solution = c.value == Poly::constant(field, h.num().lead()) % k.mu;
  } else if (dn < dd) {
    infinite_solution = c.value.is_zero();
  }
  if (infinite_solution) out.push_back(PointClass::at_infinity());
  return out;
}

ClosureSet closure(const RationalMap& f, const RationalMap& h, const ClosureSet& seed, std::uint64_t max_ext,
                   std::uint64_t max_iter, WorklistOrder order) {
  if (seed.classes.empty()) throw InvalidArgument("closure: empty seed");
  ClosureSet out = seed;
  std::deque<PointClass> work(seed.classes.begin(), seed.classes.end());
  std::uint64_t iterations = 0;
  while (!work.empty()) {
    if (++iterations > max_iter) {
      throw BudgetExceeded("closure: more than " + std::to_string(max_iter) + " classes processed");
    }
    PointClass beta;
    if (order == WorklistOrder::Fifo) {
      beta = work.front();
      work.pop_front();
    } else {
      beta = work.back();
      work.pop_back();
    }
    for (auto& alpha : backward_solutions(f, h, beta)) {
      if (alpha.degree() > max_ext) {
        throw BudgetExceeded("closure: solution " + alpha.to_string() + " needs an extension of degree " +
                             std::to_string(alpha.degree()) + " > " + std::to_string(max_ext));
      }
      if (out.classes.insert(alpha).second) work.push_back(alpha);
    }
  }
  return out;
}

Rational gamma_upper_bound(const BigInt& g0, const ClosureSet& locus) {
  if (g0 < 0) throw InvalidArgument("gamma_upper_bound: negative genus");
  return Rational(g0 - 1) + Rational(BigInt(locus.degree_sum()), BigInt(2));
}

Rational bq_lower_bound(const Rational& gamma) {
  if (gamma <= 0) throw InvalidArgument("bq_lower_bound: gamma must be positive");
  return 1 / gamma;
}

TamenessReport tameness_check(std::uint64_t e, std::uint64_t q) {
  if (e < 2) throw InvalidArgument("tameness_check: e must be >= 2");
  validate_prime_power(q);
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  if (e % p == 0) return {false, p};
  return {true, std::nullopt};
}

GenusResult first_step_genus(std::uint64_t e, const ClosureSet& locus0) {
  if (e < 2) throw InvalidArgument("first_step_genus: e must be >= 2");
  RamSummary ram;
  for (const auto& c : locus0.classes) ram.entries.push_back({c.degree(), BigInt(e - 1), 1});
  return hurwitz(BigInt(e), 0, ram);
}

std::vector<Rational> genus_growth_lower_bounds(const Rational& g1, std::uint64_t degree, std::size_t count) {
  std::vector<Rational> out;
  if (count == 0) return out;
  out.push_back(g1);
  while (out.size() < count) out.push_back(Rational(degree) * (out.back() - 1) + 1);
  return out;
}

BuiltinTower builtin_tower(const std::string& name, const Field& base) {
  const auto p = base.characteristic();
  const Poly x = Poly::x(base);
  if (name == "y3") {
    if (p == 3) throw InvalidArgument("tower y3 needs characteristic != 3");
    RationalMap h(Poly::from_ints(base, {1, 1, 1}), Poly::from_ints(base, {0, 3}));
    return {"y3", 3, RationalMap::polynomial(pow(x, 3)), h};
  }
  if (name == "y4") {
    if (p == 2) throw InvalidArgument("tower y4 needs characteristic != 2");
    RationalMap h(Poly::from_ints(base, {1, 0, 1}), Poly::from_ints(base, {0, 2}));
    return {"y4", 4, RationalMap::polynomial(pow(x, 4)), h};
  }
  throw InvalidArgument("unknown builtin tower '" + name + "' (expected y3 or y4)");
}

TowerReport analyze_tower(std::uint64_t e, const RationalMap& f, const RationalMap& h, std::uint64_t max_ext,
                          std::uint64_t max_iter) {
  const Field& base = h.field();
  if (!(f.num() == pow(Poly::x(base), e)) || !f.den().is_one()) {
    throw InvalidArgument("analyze_tower: f must be Y^e");
  }
  TowerReport r;
  r.tame = tameness_check(e, base.size());
  if (!r.tame.tame) {
    throw InvalidArgument("analyze_tower: e is divisible by the characteristic " +
                          std::to_string(*r.tame.offending_prime));
  }
  r.lambda0 = kummer_ramified(e, h).locus;
  if (!r.lambda0.classes.empty()) r.lambda = closure(f, h, r.lambda0, max_ext, max_iter);
  r.gamma_bound = gamma_upper_bound(0, r.lambda);
  if (r.gamma_bound > 0) r.bq_lower = bq_lower_bound(r.gamma_bound);
  r.first_step = first_step_genus(e, r.lambda0);
  return r;
}

}  // namespace ffa
