#pragma once

// Recursive towers f(Y) = h(X) over F_q: the Kummer ramification of the
// first step, the ramification locus as a fixed point of backward
// solutions, and the genus bounds that follow.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ffa/bigint.hpp"
#include "ffa/field.hpp"
#include "ffa/genus.hpp"
#include "ffa/poly.hpp"

namespace ffa {

// num/den with gcd(num, den) = 1 and den monic.
class RationalMap {
 public:
  RationalMap(Poly num, Poly den);
  static RationalMap polynomial(Poly num);

  const Field& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::size_t degree() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  std::string to_string(char var = 'X') const;

 private:
  Poly num_;
  Poly den_;
};

// An F_q-conjugacy class of points of P^1: either infinity or the set of
// roots of a monic irreducible polynomial over F_q.
struct PointClass {
  bool infinity = false;
  std::optional<Poly> min_poly;  // set iff !infinity

  static PointClass at_infinity() { return {true, std::nullopt}; }
  static PointClass of(const Poly& irreducible);

  std::uint64_t degree() const { return infinity ? 1 : *min_poly->degree(); }
  std::string to_string(char var = 'X') const;
};

// Finite classes by canonical_less of the minimal polynomial, infinity last.
bool operator<(const PointClass& a, const PointClass& b);
bool operator==(const PointClass& a, const PointClass& b);

// One explicit point of a class: the least root (by coordinates) in
// F_{q^k}, k = class degree; infinity has no representative.
struct ProjPoint {
  PointClass cls;
  std::optional<FieldElement> value;

  std::string to_string() const;
};
ProjPoint representative(const PointClass& cls, const Field& base);

struct ClosureSet {
  std::set<PointClass> classes;

  std::uint64_t degree_sum() const;  // number of geometric points
  bool contains(const PointClass& c) const { return classes.count(c) != 0; }
  std::vector<PointClass> sorted() const { return {classes.begin(), classes.end()}; }
};

struct KummerLocus {
  ClosureSet locus;
  // valuation of h at each class, for classes in the locus
  std::vector<std::pair<PointClass, std::int64_t>> valuations;
};

// Points where the valuation of h is not divisible by e; gcd(e, q) = 1.
KummerLocus kummer_ramified(std::uint64_t e, const RationalMap& h);

// All classes alpha with h(alpha) = f(beta) for some beta in the class.
std::vector<PointClass> backward_solutions(const RationalMap& f, const RationalMap& h, const PointClass& beta);

enum class WorklistOrder { Fifo, Lifo };

// Least superset of seed closed under beta -> backward_solutions(beta).
// Throws BudgetExceeded when a solution class has degree > max_ext or more
// than max_iter classes are processed.
ClosureSet closure(const RationalMap& f, const RationalMap& h, const ClosureSet& seed,
                   std::uint64_t max_ext = 12, std::uint64_t max_iter = 64,
                   WorklistOrder order = WorklistOrder::Fifo);

// g0 - 1 + degree_sum / 2
Rational gamma_upper_bound(const BigInt& g0, const ClosureSet& locus);

// 1 / gamma; gamma must be positive.
Rational bq_lower_bound(const Rational& gamma);

struct TamenessReport {
  bool tame = true;
  std::optional<std::uint64_t> offending_prime;
};
TamenessReport tameness_check(std::uint64_t e, std::uint64_t q);

// Hurwitz for a degree-e Kummer step over a rational base, every point of
// locus0 totally ramified with different exponent e - 1.
GenusResult first_step_genus(std::uint64_t e, const ClosureSet& locus0);

// Lower bounds g_1 = g1, g_{i+1} >= degree (g_i - 1) + 1 for i < count.
std::vector<Rational> genus_growth_lower_bounds(const Rational& g1, std::uint64_t degree, std::size_t count);

struct BuiltinTower {
  std::string name;
  std::uint64_t e = 0;
  RationalMap f;
  RationalMap h;
};

// "y3": Y^3 = (X^2+X+1)/(3X); "y4": Y^4 = (X^2+1)/(2X).
BuiltinTower builtin_tower(const std::string& name, const Field& base);

struct TowerReport {
  ClosureSet lambda0;
  ClosureSet lambda;
  Rational gamma_bound;
  std::optional<Rational> bq_lower;
  TamenessReport tame;
  GenusResult first_step;
};

TowerReport analyze_tower(std::uint64_t e, const RationalMap& f, const RationalMap& h,
                          std::uint64_t max_ext = 12, std::uint64_t max_iter = 64);

}  // namespace ffa
