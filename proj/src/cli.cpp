#include "ffa/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffa/asymptotics.hpp"
#include "ffa/carlitz.hpp"
#include "ffa/error.hpp"
#include "ffa/factor.hpp"
#include "ffa/genus.hpp"
#include "ffa/polyparse.hpp"
#include "ffa/ramification.hpp"
#include "ffa/towers.hpp"

namespace ffa::cli {

namespace {

using Row = std::vector<std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Table& t, Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_cell(t.columns[i]);
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += "\n";
  }
  return out;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const BigInt& v) { return ffa::to_string(v); }
std::string str(const Rational& v) { return ffa::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

// Decimal rounded toward -inf / +inf with `digits` fractional digits.
std::string decimal_rounded(const Rational& r, unsigned digits, bool up) {
  const BigInt scale = pow_u64(10, digits);
  const Rational scaled = r * Rational(scale);
  const BigInt n = up ? ffa::ceil(scaled) : ffa::floor(scaled);
  const bool negative = n < 0;
  const BigInt mag = negative ? BigInt(-n) : n;
  std::string frac = ffa::to_string(BigInt(mag % scale));
  if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
  std::string out = (negative ? "-" : "") + ffa::to_string(BigInt(mag / scale));
  if (digits > 0) out += "." + frac;
  return out;
}

class Params {
 public:
  Params(const RunConfig& c, std::set<std::string> allowed) : c_(c) {
    for (const auto& [k, v] : c.params) {
      if (!allowed.count(k)) throw InvalidArgument("unknown parameter --" + k + " for " + c.subcommand);
    }
  }

  bool has(const std::string& k) const { return c_.params.count(k) != 0; }

  const std::string& text(const std::string& k) const {
    auto it = c_.params.find(k);
    if (it == c_.params.end()) throw InvalidArgument("missing required parameter --" + k);
    return it->second;
  }
  std::string text_or(const std::string& k, const std::string& fallback) const {
    return has(k) ? text(k) : fallback;
  }

  std::uint64_t u64(const std::string& k) const {
    auto r = parse_range(text(k));
    if (r.size() != 1) throw InvalidArgument("--" + k + " expects a single value");
    return r[0];
  }
  std::uint64_t u64_or(const std::string& k, std::uint64_t fallback) const { return has(k) ? u64(k) : fallback; }

  std::vector<std::uint64_t> range(const std::string& k) const { return parse_range(text(k)); }
  std::vector<std::uint64_t> range_or(const std::string& k, std::uint64_t fallback) const {
    return has(k) ? range(k) : std::vector<std::uint64_t>{fallback};
  }

 private:
  const RunConfig& c_;
};

std::uint64_t char_of(std::uint64_t q) {
  validate_prime_power(q);
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  return p;
}

unsigned exponent_of(std::uint64_t q) {
  const auto p = char_of(q);
  unsigned s = 0;
  while (q > 1) {
    q /= p;
    ++s;
  }
  return s;
}

Table cmd_cyclotomic(const RunConfig& c) {
  Params p(c, {"q", "d", "n"});
  Table t{{"q", "d", "n", "phi", "two_g_minus_2", "g"}, {}};
  for (auto q : p.range("q")) {
    for (auto d : p.range("d")) {
      for (auto n : p.range_or("n", 1)) {
        const auto g = cyclotomic_genus(q, d, n);
        const BigInt phi = (pow_u64(q, d) - 1) * pow_u64(q, d * (n - 1));
        t.rows.push_back({str(q), str(d), str(n), str(phi), str(g.two_g_minus_2), str(g.g)});
      }
    }
  }
  return t;
}

Table cmd_asymptotic(const RunConfig& c) {
  Params p(c, {"q", "family", "d", "n"});
  const std::string fam = p.text_or("family", "d");
  if (fam != "d" && fam != "n") throw InvalidArgument("--family must be d or n");
  const Family family = fam == "d" ? Family::VaryD : Family::VaryN;
  Table t{{"q", "family", "d", "n", "m", "g", "ratio", "approx", "note"}, {}};
  for (auto q : p.range("q")) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> idx;
    for (auto d : p.range("d")) {
      if (family == Family::VaryD) {
        idx.emplace_back(d, 1);
      } else {
        for (auto n : p.range("n")) idx.emplace_back(d, n);
      }
    }
    for (const auto& row : mq_ratio_sequence(q, family, idx, c.precision)) {
      t.rows.push_back({str(q), fam, str(row.d), str(row.n), str(row.m), str(row.g), row.ratio_text,
                        row.ratio ? "~" : "", row.note});
    }
  }
  return t;
}

Table cmd_chebotarev(const RunConfig& c) {
  Params p(c, {"q", "k", "m", "g-f", "g-e", "d", "conj"});
  Table t{{"q", "k", "m", "g_f", "g_e", "d", "conj", "main_term", "error_upper", "lower", "lower_approx",
           "positive", "exact_powers"},
          {}};
  for (auto q : p.range("q")) {
    for (auto k : p.range("k")) {
      ChebotarevParams cp{q, k, p.u64("m"), p.u64_or("g-f", 0), p.u64_or("g-e", 0), p.u64_or("d", 1),
                          p.u64_or("conj", 1)};
      const auto b = chebotarev_lower(cp);
      t.rows.push_back({str(q), str(k), str(cp.m), str(cp.g_f), str(cp.g_e), str(cp.d), str(cp.conj_size),
                        str(b.main_term), str(b.error_upper), str(b.lower),
                        decimal_rounded(b.lower, 6, false), str(b.lower > 0), str(b.exact_powers)});
    }
  }
  return t;
}

Table cmd_bounds(const RunConfig& c) {
  Params p(c, {"kind", "q", "g", "t", "g-e", "cd", "m", "parity"});
  const std::string kind = p.text("kind");
  const unsigned digits = c.precision;
  Table t;
  if (kind == "feasibility") {
    t.columns = {"q", "g", "t", "m", "d", "ineq1", "ineq2", "ineq3", "ineq4", "feasible"};
    std::optional<std::uint64_t> t_override;
    if (p.has("t")) t_override = p.u64("t");
    for (auto q : p.range("q")) {
      for (auto g : p.range("g")) {
        const auto r = splitting_place_feasible(q, g, t_override);
        t.rows.push_back({str(q), str(g), str(r.t), str(r.m), str(r.d), str(r.checks[0].holds),
                          str(r.checks[1].holds), str(r.checks[2].holds), str(r.checks[3].holds),
                          str(r.feasible)});
      }
    }
  } else if (kind == "t") {
    t.columns = {"q", "g", "t", "naive_float", "differs"};
    for (auto q : p.range("q")) {
      for (auto g : p.range("g")) {
        const auto r = t_of_report(q, g);
        t.rows.push_back({str(q), str(g), str(r.t), std::to_string(r.naive_float), str(r.differs_from_naive())});
      }
    }
  } else if (kind == "mf") {
    t.columns = {"q", "t", "g_e", "cd", "ceil_log_t", "log_t_lower", "log_t_upper", "integer_part",
                 "log_mf_upper", "mf_upper"};
    for (auto q : p.range("q")) {
      for (auto tt : p.range("t")) {
        const auto r = mf_log_upper_bound(q, tt, p.u64_or("g-e", 0), p.u64_or("cd", 0));
        t.rows.push_back({str(q), str(tt), str(p.u64_or("g-e", 0)), str(p.u64_or("cd", 0)), str(r.ceil_log_t),
                          decimal_rounded(r.log_t.lower, digits, false),
                          decimal_rounded(r.log_t.upper, digits, true), str(r.integer_part),
                          decimal_rounded(r.log_mf_upper.upper, digits, true), str(r.mf_upper)});
      }
    }
  } else if (kind == "genus") {
    t.columns = {"q", "m", "t", "parity", "coefficient", "lower", "upper"};
    for (auto q : p.range("q")) {
      std::string parity = p.text_or("parity", char_of(q) == 2 ? "even" : "odd");
      if (parity != "even" && parity != "odd") throw InvalidArgument("--parity must be even or odd");
      for (auto m : p.range("m")) {
        for (auto tt : p.range("t")) {
          const auto r = genus_lower_bound(q, BigInt(m), tt, parity == "even" ? Parity::Even : Parity::Odd);
          const std::string lo = r.value.exact() ? str(r.value.lower) : decimal_rounded(r.value.lower, digits, false);
          const std::string hi = r.value.exact() ? str(r.value.upper) : decimal_rounded(r.value.upper, digits, true);
          t.rows.push_back({str(q), str(m), str(tt), parity, str(r.coefficient), lo, hi});
        }
      }
    }
  } else if (kind == "hasse-weil") {
    t.columns = {"q", "g", "bound"};
    for (auto q : p.range("q")) {
      for (auto g : p.range("g")) t.rows.push_back({str(q), str(g), str(hasse_weil_class_bound(q, g))});
    }
  } else {
    throw InvalidArgument("--kind must be feasibility, t, mf, genus or hasse-weil");
  }
  return t;
}

Row ramification_row(const RamFiltration& f, std::optional<std::pair<std::uint64_t, std::uint64_t>> bw) {
  const auto d = different_exponent(f);
  const auto cexp = conductor_exponent(f);
  std::string identity = f.is_unramified() ? "" : str(conductor_via_identity(f));
  std::string jumps;
  for (const auto& j : upper_jumps(f)) jumps += (jumps.empty() ? "" : ";") + str(j);
  std::string bound, holds;
  if (!bw && f.is_wild()) {
    std::uint64_t w = 0;
    for (auto g1 = f.order_at(1); g1 > 1; g1 /= f.characteristic()) ++w;
    bw = std::make_pair(f.ramification_index() / f.order_at(1), w);
  }
  if (bw && cexp >= 2) {
    const BigInt lb = abelian_different_lower_bound(cexp, bw->first, f.characteristic(), bw->second);
    bound = str(lb);
    holds = str(BigInt(d) >= lb);
  }
  return {str(f.characteristic()), f.to_string(), str(f.ramification_index()), str(std::uint64_t(f.length())),
          str(d), str(cexp), identity, str(satisfies_hasse_arf(f)), jumps, bound, holds};
}

Table cmd_ramification(const RunConfig& c) {
  Params p(c, {"p", "filtration", "b", "w", "n-max", "mode"});
  Table t{{"p", "orders", "e", "a", "d", "c", "identity", "hasse_arf", "upper_jumps", "lemma_bound", "lemma_holds"},
          {}};
  const auto prime = p.u64("p");
  if (p.has("filtration")) {
    for (const char* k : {"b", "w", "n-max", "mode"}) {
      if (p.has(k)) throw InvalidArgument("--filtration cannot be combined with --" + std::string(k));
    }
    t.rows.push_back(ramification_row(RamFiltration::parse(p.text("filtration"), prime), std::nullopt));
    return t;
  }
  const std::string mode = p.text_or("mode", "lemma");
  if (mode != "lemma" && mode != "hasse-arf") throw InvalidArgument("--mode must be lemma or hasse-arf");
  const auto adm = mode == "lemma" ? Admissibility::LemmaConstraints : Admissibility::HasseArf;
  for (auto b : p.range("b")) {
    for (auto w : p.range("w")) {
      for (const auto& f : enumerate_filtrations(b, prime, w, p.u64("n-max"), adm)) {
        t.rows.push_back(ramification_row(f, std::make_pair(b, w)));
      }
    }
  }
  return t;
}

nlohmann::ordered_json points_json(const ClosureSet& s, const Field& base) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& cls : s.sorted()) {
    nlohmann::ordered_json o;
    o["min_poly"] = cls.to_string();
    o["degree"] = cls.degree();
    o["representative"] = representative(cls, base).to_string();
    arr.push_back(std::move(o));
  }
  return arr;
}

std::string cmd_tower(const RunConfig& c) {
  Params p(c, {"builtin", "f", "h", "e", "q", "max-ext", "max-iter"});
  const auto q = p.u64("q");
  const Field base = make_field(char_of(q), exponent_of(q));
  std::optional<BuiltinTower> tower;
  if (p.has("builtin")) {
    for (const char* k : {"f", "h", "e"}) {
      if (p.has(k)) throw InvalidArgument("--builtin cannot be combined with --" + std::string(k));
    }
    tower = builtin_tower(p.text("builtin"), base);
  } else {
    tower = BuiltinTower{"custom", p.u64("e"), parse_rational_map(p.text("f"), base),
                         parse_rational_map(p.text("h"), base)};
  }
  const auto r = analyze_tower(tower->e, tower->f, tower->h, p.u64_or("max-ext", 12), p.u64_or("max-iter", 64));
  nlohmann::ordered_json out;
  out["q"] = q;
  out["e"] = tower->e;
  out["f"] = tower->f.to_string('Y');
  out["h"] = tower->h.to_string('X');
  out["lambda0"] = points_json(r.lambda0, base);
  out["lambda"] = points_json(r.lambda, base);
  out["degree_sum"] = r.lambda.degree_sum();
  out["gamma_bound"] = str(r.gamma_bound);
  out["bq_lower"] = r.bq_lower ? str(*r.bq_lower) : "";
  out["tame"] = r.tame.tame;
  out["first_step_genus"] = str(r.first_step.g);
  return out.dump(2) + "\n";
}

// Light cross-checks between independent routes through the library.
Table cmd_selftest(const RunConfig& c) {
  Params p(c, {});
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"cyclotomic_vs_example31_vs_hurwitz",
       [] {
         for (std::uint64_t q : {2, 3, 4, 5}) {
           for (std::uint64_t d = 1; d <= 4; ++d) {
             const auto a = cyclotomic_genus(q, d, 1);
             if (!(a == example31_genus(q, d)) || !(a == cyclotomic_genus_via_hurwitz(q, d, 1))) return false;
           }
         }
         return true;
       }},
      {"cyclotomic_vs_example32",
       [] {
         for (std::uint64_t q : {2, 3, 4}) {
           for (std::uint64_t n = 2; n <= 3; ++n) {
             if (!(cyclotomic_genus(q, 2, n) == example32_genus(q, 2, n))) return false;
           }
         }
         return true;
       }},
      {"carlitz_multiplicativity",
       [] {
         const Field f = make_field(3, 1);
         const Poly a = Poly::from_ints(f, {1, 2, 1});
         const Poly b = Poly::from_ints(f, {2, 0, 1});
         return compose(carlitz_action_of(a), carlitz_action_of(b)) == carlitz_action_of(a * b);
       }},
      {"factorize_roundtrip",
       [] {
         const Field f = make_field(2, 2);
         const Poly a = Poly::from_ints(f, {1, 1, 0, 1, 1, 0, 1});
         Poly prod = Poly::constant(f, a.lead());
         for (const auto& fac : factorize(a)) prod = prod * pow(fac.poly, fac.multiplicity);
         return prod == a;
       }},
      {"tower_y3_q5",
       [] {
         const Field f = make_field(5, 1);
         const auto t = builtin_tower("y3", f);
         const auto r = analyze_tower(t.e, t.f, t.h);
         return r.lambda.degree_sum() == 5 && r.gamma_bound == Rational(3, 2) && r.first_step.g == 2;
       }},
      {"conductor_identity",
       [] {
         for (const auto& f : enumerate_filtrations(1, 3, 2, 3, Admissibility::HasseArf)) {
           if (Rational(conductor_exponent(f)) != conductor_via_identity(f)) return false;
         }
         return true;
       }},
  };
  Table t{{"check", "status"}, {}};
  bool ok = true;
  for (auto& [name, fn] : checks) {
    const bool pass = fn();
    ok = ok && pass;
    t.rows.push_back({name, pass ? "pass" : "fail"});
  }
  if (!ok) {
    throw InvariantViolation("selftest failed:\n" + render(t, Format::Csv));
  }
  return t;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"cyclotomic", "asymptotic", "chebotarev", "bounds",
                                                 "ramification", "tower", "selftest"};
  return names;
}

std::vector<std::uint64_t> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
      throw InvalidArgument("invalid number '" + s + "' in '" + text + "'");
    }
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  std::vector<std::uint64_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto a = number(text.substr(0, dots));
    const auto b = number(text.substr(dots + 2));
    if (a > b) throw InvalidArgument("empty range '" + text + "'");
    if (b - a > 1000000) throw InvalidArgument("range '" + text + "' is too long");
    for (auto v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  if (out.empty()) throw InvalidArgument("empty range");
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult r;
  try {
    if (config.precision < 6) throw InvalidArgument("--precision must be >= 6");
    const auto& s = config.subcommand;
    if (s == "cyclotomic") {
      r.output = render(cmd_cyclotomic(config), config.format);
    } else if (s == "asymptotic") {
      r.output = render(cmd_asymptotic(config), config.format);
    } else if (s == "chebotarev") {
      r.output = render(cmd_chebotarev(config), config.format);
    } else if (s == "bounds") {
      r.output = render(cmd_bounds(config), config.format);
    } else if (s == "ramification") {
      r.output = render(cmd_ramification(config), config.format);
    } else if (s == "tower") {
      r.output = cmd_tower(config);
    } else if (s == "selftest") {
      r.output = render(cmd_selftest(config), config.format);
    } else {
      throw InvalidArgument("unknown subcommand '" + s + "'");
    }
  } catch (const InvalidArgument& e) {
    r = {kExitUsage, "", std::string("error: ") + e.what()};
  } catch (const BudgetExceeded& e) {
    r = {kExitBudget, "", std::string("budget exceeded: ") + e.what()};
  } catch (const InvariantViolation& e) {
    r = {kExitInvariant, "", std::string("invariant violation: ") + e.what()};
  } catch (const std::exception& e) {
    r = {kExitInvariant, "", std::string("internal error: ") + e.what()};
  }
  return r;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for function fields over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string output;
  unsigned precision = 20;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "Write the table to this file instead of stdout");
  app.add_option("--precision", precision, "Decimal digits of approximate values (>= 6)")->capture_default_str();

  struct Flag {
    const char* name;
    const char* help;
  };
  const std::map<std::string, std::vector<Flag>> flags = {
      {"cyclotomic", {{"q", "Field sizes (range)"}, {"d", "Degrees of P (range)"}, {"n", "Exponents (range, default 1)"}}},
      {"asymptotic",
       {{"q", "Field sizes (range)"}, {"family", "d (vary d, n = 1) or n (vary n)"}, {"d", "Degrees (range)"},
        {"n", "Exponents for family n (range)"}}},
      {"chebotarev",
       {{"q", "Field sizes (range)"}, {"k", "Place degrees (range)"}, {"m", "Extension degree [F:E]"},
        {"g-f", "Genus of F"}, {"g-e", "Genus of E"}, {"d", "Degree [E:F_q(x)]"}, {"conj", "Conjugacy class size"}}},
      {"bounds",
       {{"kind", "feasibility, t, mf, genus or hasse-weil"}, {"q", "Field sizes (range)"}, {"g", "Genera (range)"},
        {"t", "Place degree (override for feasibility, range for mf/genus)"}, {"g-e", "Genus of E (mf)"},
        {"cd", "Conductor degree (mf)"}, {"m", "Group orders (genus, range)"}, {"parity", "even or odd (genus)"}}},
      {"ramification",
       {{"p", "Characteristic"}, {"filtration", "Orders g0,g1,... of one filtration"}, {"b", "Prime-to-p part (range)"},
        {"w", "p-exponent of g1 (range)"}, {"n-max", "Largest level count"}, {"mode", "lemma or hasse-arf"}}},
      {"tower",
       {{"builtin", "y3 or y4"}, {"f", "f(Y) as NUM/DEN"}, {"h", "h(X) as NUM/DEN"}, {"e", "Kummer degree of f = Y^e"},
        {"q", "Field size"}, {"max-ext", "Largest extension degree (default 12)"},
        {"max-iter", "Largest number of processed classes (default 64)"}}},
      {"selftest", {}},
  };
  const std::map<std::string, std::string> descriptions = {
      {"cyclotomic", "Genus of cyclotomic function fields"},
      {"asymptotic", "m log_q m / g along the cyclotomic families"},
      {"chebotarev", "Explicit Chebotarev lower bound"},
      {"bounds", "Splitting-place feasibility and related bounds"},
      {"ramification", "Different, conductor and lemma bound for filtrations"},
      {"tower", "Ramification locus and genus bounds of a recursive tower"},
      {"selftest", "Quick cross-checks between independent routes"},
  };

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, CLI::Option*>> options;
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : subcommands()) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->set_help_flag("--help", "Print this help message and exit");
    subs[name] = sub;
    for (const auto& flag : flags.at(name)) {
      options[name][flag.name] = sub->add_option(std::string("--") + flag.name, values[name][flag.name], flag.help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig config;
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    config.subcommand = name;
    for (const auto& [flag, opt] : options[name]) {
      if (opt->count() > 0) config.params[flag] = values[name][flag];
    }
  }
  config.format = format == "json" ? Format::Json : Format::Csv;
  config.precision = precision;
  if (!output.empty()) config.output = output;

  RunResult r = run(config);
  if (!r.diagnostic.empty()) err << r.diagnostic << "\n";
  if (r.status != kExitOk) return r.status;
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.output << "\n";
      return kExitUsage;
    }
    file << r.output;
  } else {
    out << r.output;
  }
  return kExitOk;
}

}  // namespace ffa::cli
