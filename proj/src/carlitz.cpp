#include "ffa/carlitz.hpp"

#include "ffa/error.hpp"

namespace ffa {

LinearizedOperator::LinearizedOperator(Field base, std::vector<Poly> coeffs)
    : base_(std::move(base)), a_(std::move(coeffs)) {
  for (const auto& c : a_) {
    if (!(c.field() == base_)) throw InvalidArgument("operator coefficient over the wrong field");
  }
  trim();
}

void LinearizedOperator::trim() {
  while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
}

LinearizedOperator LinearizedOperator::identity(const Field& base) {
  return LinearizedOperator(base, {Poly::constant(base, base.one())});
}

std::string LinearizedOperator::to_string() const {
  if (a_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + a_[i].to_string() + ") * z^(q^" + std::to_string(i) + ")";
  }
  return out;
}

bool operator==(const LinearizedOperator& a, const LinearizedOperator& b) {
  return a.base_ == b.base_ && a.a_ == b.a_;
}

LinearizedOperator operator+(const LinearizedOperator& a, const LinearizedOperator& b) {
  if (!(a.base() == b.base())) throw InvalidArgument("operators over different base fields");
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Poly> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
  return LinearizedOperator(a.base(), std::move(out));
}

LinearizedOperator compose(const LinearizedOperator& a, const LinearizedOperator& b) {
  if (!(a.base() == b.base())) throw InvalidArgument("compose: operators over different base fields");
  const Field& f = a.base();
  if (a.is_zero() || b.is_zero()) return LinearizedOperator(f);
  const std::uint64_t q = f.size();
  const std::size_t na = a.coeffs().size();
  const std::size_t nb = b.coeffs().size();

  // b_j^{q^i} = b_j(x^{q^i}) since the coefficients lie in F_q; accumulate
  // a_i * b_j(x^{q^i}) directly into dense buffers.
  std::vector<std::vector<Fe>> acc(na + nb - 1);
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < na; ++i, qi *= q) {
    const auto& ai = a.coeffs()[i].coeffs();
    if (ai.empty()) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      const auto& bj = b.coeffs()[j].coeffs();
      if (bj.empty()) continue;
      auto& out = acc[i + j];
      const std::size_t need = (ai.size() - 1) + (bj.size() - 1) * qi + 1;
      if (out.size() < need) out.resize(need, f.zero());
      for (std::size_t n = 0; n < bj.size(); ++n) {
        if (bj[n].code == 0) continue;
        const std::size_t offset = n * qi;
        for (std::size_t m = 0; m < ai.size(); ++m) {
          if (ai[m].code == 0) continue;
          out[m + offset] = f.add(out[m + offset], f.mul(ai[m], bj[n]));
        }
      }
    }
  }
  std::vector<Poly> coeffs;
  coeffs.reserve(acc.size());
  for (auto& v : acc) coeffs.emplace_back(f, std::move(v));
  return LinearizedOperator(f, std::move(coeffs));
}

LinearizedOperator carlitz_action_of(const Poly& m) {
  if (m.is_zero()) throw InvalidArgument("carlitz_action_of: zero modulus");
  const Field& f = m.field();
  const std::uint64_t q = f.size();
  std::vector<Poly> acc;  // coefficients of the running operator A
  for (std::size_t j = m.coeffs().size(); j-- > 0;) {
    // A <- A o phi: new_k = a_{k-1} + a_k * x^{q^k}
    std::vector<Poly> next;
    if (!acc.empty()) {
      next.reserve(acc.size() + 1);
      std::uint64_t qk = 1;
      for (std::size_t k = 0; k <= acc.size(); ++k, qk *= q) {
        Poly term(f);
        if (k < acc.size()) term = shift(acc[k], qk);
        if (k > 0) term = term + acc[k - 1];
        next.push_back(std::move(term));
      }
    }
    // A <- A + c_j * id
    if (next.empty()) next.emplace_back(f);
    next[0] = next[0] + Poly::constant(f, m.coeffs()[j]);
    acc = std::move(next);
  }
  return LinearizedOperator(f, std::move(acc));
}

std::optional<std::size_t> ZPoly::z_degree() const {
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (!coeffs[k].is_zero()) return k;
  }
  return std::nullopt;
}

ZPoly ZPoly::derivative_z() const {
  ZPoly out{base, {}};
  const auto p = base.characteristic();
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    out.coeffs.push_back(scale(coeffs[k], base.from_int(static_cast<std::int64_t>(k % p))));
  }
  while (!out.coeffs.empty() && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  return out;
}

ZPoly torsion_polynomial(const Poly& m) {
  const LinearizedOperator op = carlitz_action_of(m);
  const Field& f = m.field();
  ZPoly out{f, {}};
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < op.coeffs().size(); ++i, qi *= f.size()) {
    if (out.coeffs.size() <= qi) out.coeffs.resize(qi + 1, Poly(f));
    out.coeffs[qi] = op.coeffs()[i];
  }
  return out;
}

Poly specialize(const LinearizedOperator& op, const FieldElement& alpha) {
  const Field& k = alpha.field;
  Embedding emb(op.base(), k);
  const std::uint64_t q = op.base().size();
  std::vector<Fe> dense;
  std::uint64_t qi = 1;
  for (std::size_t i = 0; i < op.coeffs().size(); ++i, qi *= q) {
    if (dense.size() <= qi) dense.resize(qi + 1, k.zero());
    dense[qi] = emb.map(op.coeffs()[i])(alpha.value);
  }
  return Poly(k, std::move(dense));
}

BigInt euler_phi_modulus(const Poly& m, std::optional<std::span<const Factor>> factored) {
  if (m.is_zero() || m.is_constant()) {
    throw InvalidArgument("euler_phi_modulus: modulus must be nonconstant");
  }
  std::vector<Factor> own;
  std::span<const Factor> factors;
  if (factored) {
    factors = *factored;
  } else {
    own = factorize(m);
    factors = own;
  }
  const BigInt q = m.field().size();
  BigInt result = 1;
  for (const auto& fac : factors) {
    const std::uint64_t d = *fac.poly.degree();
    result *= (pow(q, d) - 1) * pow(q, (fac.multiplicity - 1) * d);
  }
  return result;
}

std::uint64_t DivisorShape::degree() const {
  std::uint64_t total = 0;
  for (const auto& pl : places) total += pl.degree * pl.multiplicity;
  return total;
}

void DivisorShape::validate() const {
  for (const auto& pl : places) {
    if (pl.degree == 0 || pl.multiplicity == 0) {
      throw InvalidArgument("divisor places need degree and multiplicity >= 1");
    }
  }
}

BigInt euler_phi_divisor(const DivisorShape& d, std::uint64_t q) {
  d.validate();
  BigInt result = 1;
  const BigInt bq = q;
  for (const auto& pl : d.places) {
    result *= (pow(bq, pl.degree) - 1) * pow(bq, (pl.multiplicity - 1) * pl.degree);
  }
  return result;
}

}  // namespace ffa
