#include "ffa/ramification.hpp"

#include <charconv>

#include "ffa/error.hpp"
#include "ffa/field.hpp"

namespace ffa {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

}  // namespace

RamFiltration::RamFiltration(std::uint64_t p, std::vector<std::uint64_t> orders)
    : p_(p), g_(std::move(orders)) {
  if (!is_prime(p_)) throw InvalidArgument("filtration characteristic must be prime");
  for (std::size_t i = 0; i < g_.size(); ++i) {
    if (g_[i] < 2) throw InvalidArgument("filtration orders must be >= 2 (trivial groups are implicit)");
    if (i > 0 && g_[i - 1] % g_[i] != 0) {
      throw InvalidArgument("filtration orders must form a divisibility chain");
    }
    if (i > 0 && !is_power_of(g_[i], p_)) {
      throw InvalidArgument("higher ramification groups must be p-groups");
    }
  }
  if (!g_.empty() && order_at(1) != p_part(g_[0], p_)) {
    throw InvalidArgument("g_1 must equal the p-part of g_0");
  }
}

RamFiltration RamFiltration::parse(std::string_view text, std::uint64_t p) {
  std::vector<std::uint64_t> orders;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw InvalidArgument("malformed filtration entry: '" + std::string(item) + "'");
    }
    orders.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return RamFiltration(p, std::move(orders));
}

std::string RamFiltration::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < g_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(g_[i]);
  }
  return out;
}

std::uint64_t different_exponent(const RamFiltration& f) {
  std::uint64_t d = 0;
  for (auto g : f.orders()) d += g - 1;
  return d;
}

Rational phi_herbrand(const RamFiltration& f, const Rational& x) {
  if (x < -1) throw InvalidArgument("phi_herbrand: argument below -1");
  if (x <= 0) return x;
  const BigInt whole = floor(x);
  const auto n = static_cast<std::size_t>(whole);
  BigInt sum = 0;
  for (std::size_t i = 1; i <= n && i < f.length(); ++i) sum += f.order_at(i);
  if (n >= f.length()) sum += BigInt(n + 1 - std::max<std::size_t>(f.length(), 1));
  // the loop above stops at a-1; indices a..n contribute g_i = 1 each
  Rational value = Rational(sum) + (x - Rational(whole)) * Rational(f.order_at(n + 1));
  return value / Rational(f.ramification_index());
}

Rational psi_herbrand(const RamFiltration& f, const Rational& v) {
  if (v < -1) throw InvalidArgument("psi_herbrand: argument below -1");
  if (v <= 0) return v;
  const Rational e = f.ramification_index();
  Rational reached = 0;  // phi(i)
  for (std::size_t i = 0;; ++i) {
    const Rational slope = Rational(f.order_at(i + 1)) / e;
    if (i + 1 >= f.length()) {
      // from here on the slope is constant
      return Rational(i) + (v - reached) / slope;
    }
    if (reached + slope >= v) return Rational(i) + (v - reached) / slope;
    reached += slope;
  }
}

std::vector<Rational> upper_jumps(const RamFiltration& f) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (f.order_at(i) != f.order_at(i + 1)) out.push_back(phi_herbrand(f, Rational(i)));
  }
  return out;
}

std::uint64_t conductor_exponent(const RamFiltration& f) {
  if (f.is_unramified()) return 0;
  // G^v = G_{psi(v)} is trivial exactly when psi(v) > a - 1, i.e. v > phi(a - 1).
  const Rational last = phi_herbrand(f, Rational(f.length() - 1));
  return static_cast<std::uint64_t>(floor(last)) + 1;
}

Rational conductor_via_identity(const RamFiltration& f) {
  if (f.is_unramified()) throw InvalidArgument("conductor_via_identity: unramified filtration");
  return Rational(different_exponent(f) + f.length(), f.ramification_index());
}

bool satisfies_hasse_arf(const RamFiltration& f) {
  for (const auto& j : upper_jumps(f)) {
    if (!is_integer(j)) return false;
  }
  return true;
}

BigInt abelian_different_lower_bound(std::uint64_t c, std::uint64_t b, std::uint64_t p, std::uint64_t w) {
  if (c < 2) throw InvalidArgument("abelian_different_lower_bound: conductor exponent must be >= 2");
  if (!is_prime(p)) throw InvalidArgument("abelian_different_lower_bound: p must be prime");
  if (w < 1) throw InvalidArgument("abelian_different_lower_bound: w must be >= 1");
  if (b == 0 || b % p == 0) throw InvalidArgument("abelian_different_lower_bound: p must not divide b");
  const BigInt pw1 = pow_u64(p, w - 1);
  const BigInt bc = c;
  const BigInt bb = b;
  return bc * bb * pw1 * p - 1 - bb - (bc - 2) * bb * pw1;
}

std::vector<RamFiltration> enumerate_filtrations(std::uint64_t b, std::uint64_t p, std::uint64_t w,
                                                 std::uint64_t n_max, Admissibility mode) {
  if (!is_prime(p)) throw InvalidArgument("enumerate_filtrations: p must be prime");
  if (b == 0 || b % p == 0) throw InvalidArgument("enumerate_filtrations: p must not divide b");
  if (w < 1) throw InvalidArgument("enumerate_filtrations: w must be >= 1");
  std::vector<std::uint64_t> levels(w);  // p^w, p^{w-1}, ..., p
  std::uint64_t pw = 1;
  for (std::uint64_t j = 0; j < w; ++j) pw *= p;
  for (std::uint64_t j = 0, v = pw; j < w; ++j, v /= p) levels[j] = v;

  std::vector<RamFiltration> out;
  std::vector<std::uint64_t> n(w, 0);
  for (;;) {
    if (n[0] >= 1 && n[0] % b == 0) {
      std::vector<std::uint64_t> orders{b * pw};
      for (std::uint64_t j = 0; j < w; ++j) orders.insert(orders.end(), n[j], levels[j]);
      RamFiltration f(p, std::move(orders));
      if (mode == Admissibility::LemmaConstraints || satisfies_hasse_arf(f)) out.push_back(std::move(f));
    }
    // odometer, last level fastest
    std::size_t j = w;
    while (j > 0) {
      --j;
      if (n[j] < n_max) {
        ++n[j];
        break;
      }
      n[j] = 0;
      if (j == 0) return out;
    }
    if (w == 0) return out;
  }
}

}  // namespace ffa
