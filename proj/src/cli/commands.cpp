#include "sevenfour/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "sevenfour/beta/beta_sequence.hpp"
#include "sevenfour/charvar/character_variety.hpp"
#include "sevenfour/core/errors.hpp"
#include "sevenfour/core/poly_factor.hpp"
#include "sevenfour/cyclo/cyclotomic.hpp"
#include "sevenfour/ec/elliptic.hpp"

namespace sevenfour::cli {

namespace {

using nlohmann::json;
using arith::IntPoly;

struct Options {
  std::vector<unsigned long> d;
  std::optional<unsigned long> d_min, d_max;
  std::vector<unsigned long> gens;
  unsigned count = 3;
  std::optional<unsigned> max_n;
  unsigned residue_max_n = 1001;
  std::string format = "json";
  std::string out;
  unsigned precision_bits = 128;
  unsigned long budget = 1'000'000;
  std::string suite = "all";
  double a_min = -2, a_max = 2;
  unsigned steps = 401;
  std::string coeffs;
  std::string curve = "0,2,0,0,-1";
  bool z_is_zero = false;
};

std::string big(const BigInt& v) { return v.get_str(); }

json big_list(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(big(c));
  return a;
}

json factorization_json(const arith::Factorization& f) {
  json factors = json::array();
  for (const auto& pp : f.factors) factors.push_back({{"prime", big(pp.prime)}, {"exponent", pp.exponent}});
  return {{"sign", f.sign}, {"factors", factors}, {"cofactor", big(f.cofactor)}, {"complete", f.complete()},
          {"text", f.to_string()}};
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer list: '" + s + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty coefficient list");
  return out;
}

IntPoly parse_poly(const std::string& s) {
  std::vector<BigInt> c;
  for (long v : parse_long_list(s)) c.emplace_back(v);
  IntPoly p(c);
  if (p.is_zero()) throw InvalidInput("polynomial must be nonzero");
  return p;
}

std::vector<unsigned long> d_values(const Options& o, bool odd_only) {
  std::vector<unsigned long> ds;
  if (!o.d.empty()) {
    ds = o.d;
  } else if (o.d_min && o.d_max) {
    if (*o.d_min > *o.d_max) throw InvalidInput("empty d range");
    for (unsigned long d = *o.d_min; d <= *o.d_max; ++d) {
      if (!odd_only || d % 2 == 1) ds.push_back(d);
    }
  } else {
    throw InvalidInput("give --d or both --d-min and --d-max");
  }
  if (ds.empty()) throw InvalidInput("d range contains no admissible values");
  for (unsigned long d : ds) {
    if (odd_only && (d % 2 == 0 || d < 3)) throw InvalidInput("d must be odd and >= 3, got " + std::to_string(d));
  }
  return ds;
}

arith::FactorLimits cli_limits() {
  arith::FactorLimits lim;
  lim.require_complete = false;
  return lim;
}

struct Output {
  json doc;
  std::string csv;  // used when non-empty
  int code = kOk;
};

json envelope(const std::string& command, json config, json results) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"config", std::move(config)},
          {"results", std::move(results)}};
}

void require_format(const Options& o, bool csv_ok) {
  if (o.format != "json" && o.format != "csv") throw InvalidInput("--format must be json or csv");
  if (o.format == "csv" && !csv_ok) throw InvalidInput("csv output is not available for this subcommand");
}

std::string csv_join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + big(v[i]);
  return s;
}

Output cmd_norms(const Options& o) {
  require_format(o, true);
  const auto ds = d_values(o, true);
  json rows = json::array();
  std::string csv = "d,value,residue_mod4,factorization,complete,ramified_primes\n";
  for (unsigned long d : ds) {
    const auto r = cyclo::norm_cd(d, cli_limits());
    rows.push_back({{"d", d},
                    {"value", big(r.value)},
                    {"residue_mod4", r.residue_mod4},
                    {"factorization", factorization_json(r.factorization)},
                    {"ramified_primes", big_list(r.ramified_primes)}});
    csv += std::to_string(d) + "," + big(r.value) + "," + std::to_string(r.residue_mod4) + "," +
           r.factorization.to_string() + "," + (r.factorization.complete() ? "true" : "false") + "," +
           csv_join(r.ramified_primes) + "\n";
  }
  Output out{envelope("norms", {{"d", ds}}, rows), "", kOk};
  if (o.format == "csv") out.csv = csv;
  return out;
}

Output cmd_ramified(const Options& o) {
  require_format(o, true);
  const auto ds = d_values(o, true);
  json rows = json::array();
  std::string csv = "d,complete,ramified_primes\n";
  for (unsigned long d : ds) {
    const auto r = cyclo::norm_cd(d, cli_limits());
    rows.push_back({{"d", d}, {"complete", r.factorization.complete()}, {"ramified_primes", big_list(r.ramified_primes)}});
    csv += std::to_string(d) + "," + (r.factorization.complete() ? "true" : "false") + "," +
           csv_join(r.ramified_primes) + "\n";
  }
  Output out{envelope("ramified", {{"d", ds}}, rows), "", kOk};
  if (o.format == "csv") out.csv = csv;
  return out;
}

void check_precision(const Options& o) {
  if (o.precision_bits < 64) throw InvalidInput("--precision-bits must be >= 64");
}

Output cmd_sequence(const Options& o) {
  require_format(o, false);
  check_precision(o);
  if (o.count < 1) throw InvalidInput("--count must be >= 1");
  beta::SearchOptions so;
  so.budget = o.budget;
  so.precision_bits = o.precision_bits;
  const auto seq = beta::build_n_sequence(o.gens, o.count, so);
  const auto certs = beta::extract_d_sequence(seq);
  const std::string problem = beta::certificate_problem(certs);

  json entries = json::array();
  for (const auto& e : seq.entries) {
    entries.push_back({{"n", e.n},
                       {"s_sign", e.s_sign},
                       {"angle_fraction", e.prescreen.fraction},
                       {"angle_error_bound", e.prescreen.error_bound},
                       {"sign_hint", e.prescreen.sign_hint}});
  }
  json cj = json::array();
  for (const auto& c : certs) {
    BigInt absn = abs(c.norm);
    cj.push_back({{"index", c.index},
                  {"d", c.d},
                  {"norm", big(c.norm)},
                  {"abs_norm_mod4", mpz_fdiv_ui(absn.get_mpz_t(), 4)},
                  {"factorization", factorization_json(c.factorization)},
                  {"primes", big_list(c.primes)}});
  }
  json results = {{"n_sequence", entries}, {"certificates", cj}, {"valid", problem.empty()}};
  if (!problem.empty()) results["problem"] = problem;
  json config = {{"gens", o.gens}, {"count", o.count}, {"budget", o.budget}, {"precision_bits", o.precision_bits}};
  return {envelope("sequence", config, results), "", problem.empty() ? kOk : kVerificationFailed};
}

ec::WeierstrassCurve parse_curve(const std::string& s) {
  const auto a = parse_long_list(s);
  if (a.size() != 5) throw InvalidInput("--curve takes a1,a2,a3,a4,a6");
  return ec::curve_invariants(a[0], a[1], a[2], a[3], a[4]);
}

json curve_json(const ec::WeierstrassCurve& e) {
  return {{"a", {big(e.a1), big(e.a2), big(e.a3), big(e.a4), big(e.a6)}},
          {"b2", big(e.b2)},
          {"b4", big(e.b4)},
          {"b6", big(e.b6)},
          {"b8", big(e.b8)},
          {"c4", big(e.c4)},
          {"c6", big(e.c6)},
          {"disc", big(e.disc)},
          {"j", e.j.get_str()}};
}

Output cmd_divpoly(const Options& o) {
  require_format(o, true);
  const unsigned n_max = o.max_n.value_or(4);
  if (n_max < 1) throw InvalidInput("--max-n must be >= 1");
  const auto curve = parse_curve(o.curve);
  const ec::DivPolyTable table(curve, n_max);
  json rows = json::array();
  std::string csv = "n,index,coefficient\n";
  for (unsigned n = 1; n <= n_max; ++n) {
    rows.push_back({{"n", n}, {"degree", table[n].degree()}, {"coeffs", poly_json(table[n])}});
    const auto& c = table[n].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) csv += std::to_string(n) + "," + std::to_string(i) + "," + big(c[i]) + "\n";
  }
  json results = {{"curve", curve_json(curve)}, {"f", rows}};
  Output out{envelope("divpoly", {{"curve", o.curve}, {"max_n", n_max}}, results), "", kOk};
  if (o.format == "csv") out.csv = csv;
  return out;
}

// Counts checks and remembers the first failure.
struct Tally {
  std::string name;
  long checks = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what();
  }
  bool passed() const { return first_failure.empty(); }
  json to_json() const {
    json j = {{"suite", name}, {"checks", checks}, {"passed", passed()}};
    j["first_failure"] = passed() ? json(nullptr) : json(first_failure);
    return j;
  }
};

Tally suite_factlist(unsigned max_n) {
  Tally t;
  t.name = "factlist";
  if (max_n < 2) throw InvalidInput("factlist suite needs --max-n >= 2");
  const ec::DivPolyTable table(ec::default_curve(), std::max(max_n, 4u));
  const std::vector<IntPoly> printed = {
      IntPoly{1}, IntPoly{-4, 0, 8, 4}, IntPoly{-8, -12, 0, 8, 3},
      IntPoly{64, 256, 192, -416, -896, -672, -168, 64, 48, 8}};
  for (unsigned n = 1; n <= 4; ++n) {
    t.check(table[n] == printed[n - 1], [n] { return "f_" + std::to_string(n) + " differs from the printed list"; });
  }
  for (unsigned n = 2; n <= max_n; ++n) {
    try {
      ec::factlist_check(table, n);
      t.check(true, {});
    } catch (const VerificationFailure& e) {
      const std::string msg = e.what();
      t.check(false, [msg] { return msg; });
    }
    if (n % 2 == 0) {
      t.check(ec::divisibility_check(table, n), [n] { return "f_2 does not divide f_" + std::to_string(n); });
    }
  }
  return t;
}

Tally suite_norms(unsigned long d_max) {
  Tally t;
  t.name = "norms";
  if (d_max < 3) throw InvalidInput("norms suite needs --d-max >= 3");
  for (unsigned long d = 3; d <= d_max; d += 2) {
    const BigInt v = cyclo::norm_cd_value(d);
    t.check(mpz_fdiv_ui(v.get_mpz_t(), 4) == 1, [d] { return "N(c_" + std::to_string(d) + ") is not 1 mod 4"; });
    if (d > 201) continue;
    t.check(cyclo::norm_cd_via_resultant(d) == v,
            [d] { return "resultant and evaluation norms differ at d=" + std::to_string(d); });
    t.check(cyclo::order_bound_audit(d), [d] { return "order bound fails at d=" + std::to_string(d); });
  }
  return t;
}

Tally suite_identity(unsigned max_n, unsigned residue_max_n) {
  Tally t;
  t.name = "identity";
  t.check(beta::s_of_n(3) == 11, [] { return "s(3) != 11"; });
  t.check(beta::norm_product(3) == -11, [] { return "product of norms over d | 3 != -11"; });
  for (unsigned long n = 1; n <= max_n; n += 2) {
    t.check(beta::abs_product_identity_audit(n), [n] { return "|prod N(c_d)| != |s(n)| at n=" + std::to_string(n); });
    if (n % 4 == 1 && n >= 5) {
      t.check(beta::product_identity_audit(n), [n] { return "prod N(c_d) != s(n) at n=" + std::to_string(n); });
    }
  }
  for (unsigned long n = 1; n <= residue_max_n; n += 2) {
    t.check(beta::s_residue_audit(n), [n] { return "s(n) residue class wrong at n=" + std::to_string(n); });
  }
  return t;
}

Tally suite_irreducible() {
  Tally t;
  t.name = "irreducible";
  for (unsigned long d = 3; d <= 41; d += 2) {
    const auto r = charvar::irreducibility_certificate(d);
    t.check(r.verdict == charvar::Verdict::kIrreducible,
            [d] { return "no irreducibility certificate for d=" + std::to_string(d); });
  }
  for (unsigned long d = 45; d <= 101; d += 2) {
    t.check(charvar::house_bound_check(d), [d] { return "house bound fails at d=" + std::to_string(d); });
  }
  const auto p4 = arith::factor_over_Z(charvar::rational_surgery_cubic(4));
  t.check(p4.factors.size() == 2 && p4.factors[0].first == IntPoly{1, 1} && p4.factors[1].first == IntPoly{-1, 1, 1},
          [] { return "p_4 is not (R+1)(R^2+R-1)"; });
  const auto p8 = arith::factor_over_Z(charvar::rational_surgery_cubic(8));
  t.check(p8.factors.size() == 2 && p8.factors[0].first == IntPoly{-1, 1} && p8.factors[1].first == IntPoly{1, 1, 1},
          [] { return "p_8 is not (R-1)(R^2+R+1)"; });
  return t;
}

Output cmd_verify(const Options& o, std::ostream& err) {
  require_format(o, false);
  static const std::vector<std::string> kSuites = {"factlist", "norms", "identity", "irreducible"};
  std::vector<std::string> run;
  if (o.suite == "all") {
    run = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), o.suite) != kSuites.end()) {
    run = {o.suite};
  } else {
    throw InvalidInput("unknown suite '" + o.suite + "'");
  }
  json suites = json::array();
  bool all_ok = true;
  for (const auto& s : run) {
    Tally t;
    if (s == "factlist") t = suite_factlist(o.max_n.value_or(64));
    if (s == "norms") t = suite_norms(o.d_max.value_or(501));
    if (s == "identity") t = suite_identity(o.max_n.value_or(105), o.residue_max_n);
    if (s == "irreducible") t = suite_irreducible();
    err << "suite " << t.name << ": " << (t.passed() ? "PASS" : "FAIL") << " (" << t.checks << " checks)";
    if (!t.passed()) err << " first failure: " << t.first_failure;
    err << "\n";
    all_ok = all_ok && t.passed();
    suites.push_back(t.to_json());
  }
  json config = {{"suite", o.suite}, {"residue_max_n", o.residue_max_n}};
  config["max_n"] = o.max_n ? json(*o.max_n) : json(nullptr);
  config["d_max"] = o.d_max ? json(*o.d_max) : json(nullptr);
  return {envelope("verify", config, {{"passed", all_ok}, {"suites", suites}}), "",
          all_ok ? kOk : kVerificationFailed};
}

std::string method_name(charvar::IrreducibilityMethod m) {
  switch (m) {
    case charvar::IrreducibilityMethod::kModP: return "mod_p";
    case charvar::IrreducibilityMethod::kRationalFactorization: return "rational_factorization";
    case charvar::IrreducibilityMethod::kHouseBound: return "house_bound";
  }
  return "?";
}

std::string verdict_name(charvar::Verdict v) {
  switch (v) {
    case charvar::Verdict::kIrreducible: return "irreducible";
    case charvar::Verdict::kReducible: return "reducible";
    case charvar::Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

Output cmd_irreducible(const Options& o) {
  require_format(o, true);
  const auto ds = d_values(o, true);
  json rows = json::array();
  std::string csv = "d,method,verdict,prime,root_bound\n";
  for (unsigned long d : ds) {
    charvar::IrreducibilityReport r;
    if (d <= 41) {
      r = charvar::irreducibility_certificate(d);
    } else {
      r.d = d;
      r.method = charvar::IrreducibilityMethod::kHouseBound;
      r.root_bound = charvar::conjugate_root_maximum(d);
      r.verdict = charvar::house_bound_check(d) ? charvar::Verdict::kIrreducible : charvar::Verdict::kInconclusive;
    }
    json row = {{"d", d}, {"method", method_name(r.method)}, {"verdict", verdict_name(r.verdict)}};
    if (r.method == charvar::IrreducibilityMethod::kModP) row["prime"] = r.prime;
    if (r.method == charvar::IrreducibilityMethod::kHouseBound) row["root_bound"] = r.root_bound;
    if (!r.factors.empty()) {
      json fs = json::array();
      for (const auto& [f, e] : r.factors) fs.push_back({{"factor", poly_json(f)}, {"exponent", e}});
      row["factors"] = fs;
    }
    rows.push_back(row);
    csv += std::to_string(d) + "," + method_name(r.method) + "," + verdict_name(r.verdict) + "," +
           std::to_string(r.prime) + "," + fmt("%.15f", r.root_bound) + "\n";
  }
  Output out{envelope("irreducible", {{"d", ds}}, rows), "", kOk};
  if (o.format == "csv") out.csv = csv;
  return out;
}

Output cmd_rootplot(const Options& o) {
  require_format(o, true);
  if (!(o.a_min >= -2 && o.a_max <= 2 && o.a_min < o.a_max)) throw InvalidInput("need -2 <= a-min < a-max <= 2");
  if (o.steps < 2) throw InvalidInput("--steps must be >= 2");
  json rows = json::array();
  std::string csv = "a,largest_real_root\n";
  for (unsigned i = 0; i < o.steps; ++i) {
    const double a = i + 1 == o.steps ? o.a_max : o.a_min + (o.a_max - o.a_min) * i / (o.steps - 1);
    const double v = charvar::largest_real_root(a);
    rows.push_back({{"a", a}, {"largest_real_root", v}});
    csv += fmt("%.10g", a) + "," + fmt("%.15f", v) + "\n";
  }
  Output out{envelope("rootplot", {{"a_min", o.a_min}, {"a_max", o.a_max}, {"steps", o.steps}}, rows), "", kOk};
  if (o.format == "csv") out.csv = csv;
  return out;
}

Output cmd_torsion(const Options& o) {
  require_format(o, false);
  const IntPoly p = parse_poly(o.coeffs);
  const auto v = ec::torsion_obstruction(p);
  json results = {{"x_minpoly", poly_json(p)}, {"verdict", ec::to_string(v.kind)}, {"reason", v.reason}};
  return {envelope("torsion-check", {{"coeffs", o.coeffs}}, results), "", kOk};
}

Output cmd_condition_star(const Options& o) {
  require_format(o, false);
  const IntPoly p = parse_poly(o.coeffs);
  const auto rep = charvar::condition_star(p);
  json pairs = json::array();
  for (const auto& pr : rep.pairings) {
    pairs.push_back({{"w_poly", poly_json(pr.w_poly)},
                     {"trace_poly", poly_json(pr.trace_poly)},
                     {"w_degree", pr.w_degree},
                     {"trace_degree", pr.trace_degree}});
  }
  json results = {{"alexander", poly_json(p)}, {"holds", rep.holds}, {"pairings", pairs}};
  return {envelope("condition-star", {{"coeffs", o.coeffs}}, results), "", kOk};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string rootplot_format = "csv";
  CLI::App app{"Exact computations for (d,0) surgeries on the knot 7_4"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_d = [&](CLI::App* s) {
    s->add_option("--d", o.d, "d values, comma separated")->delimiter(',');
    s->add_option("--d-min", o.d_min);
    s->add_option("--d-max", o.d_max);
  };
  auto add_common = [&](CLI::App* s, std::string* format) {
    s->add_option("--format", *format, "json or csv")->capture_default_str();
    s->add_option("--out", o.out, "write output to this file instead of stdout");
  };

  auto* norms = app.add_subcommand("norms", "signed norms N(c_d) with factorizations");
  add_d(norms);
  add_common(norms, &o.format);
  auto* ramified = app.add_subcommand("ramified", "primes = 3 mod 4 dividing N(c_d) to an odd power");
  add_d(ramified);
  add_common(ramified, &o.format);
  auto* sequence = app.add_subcommand("sequence", "sign-alternating sequence and ramification certificates");
  sequence->add_option("--gens", o.gens, "semigroup generators, primes = 1 mod 4")->delimiter(',')->required();
  sequence->add_option("--count", o.count)->capture_default_str();
  sequence->add_option("--budget", o.budget, "largest multiplier tried per step")->capture_default_str();
  sequence->add_option("--precision-bits", o.precision_bits)->capture_default_str();
  add_common(sequence, &o.format);
  auto* divpoly = app.add_subcommand("divpoly", "division polynomials f_1..f_N");
  divpoly->add_option("--max-n", o.max_n, "largest index (default 4)");
  divpoly->add_option("--curve", o.curve, "a1,a2,a3,a4,a6")->capture_default_str();
  add_common(divpoly, &o.format);
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", o.suite, "factlist, norms, identity, irreducible or all")->capture_default_str();
  verify->add_option("--max-n", o.max_n, "bound for factlist (64) and identity (105)");
  verify->add_option("--d-max", o.d_max, "bound for the norms suite (501)");
  verify->add_option("--residue-max-n", o.residue_max_n)->capture_default_str();
  add_common(verify, &o.format);
  auto* irreducible = app.add_subcommand("irreducible", "irreducibility of the surgery cubic over the trace field");
  add_d(irreducible);
  add_common(irreducible, &o.format);
  auto* rootplot = app.add_subcommand("rootplot", "largest real root of R^3 - a R^2 - 1 over a grid");
  rootplot->add_option("--a-min", o.a_min)->capture_default_str();
  rootplot->add_option("--a-max", o.a_max)->capture_default_str();
  rootplot->add_option("--steps", o.steps)->capture_default_str();
  add_common(rootplot, &rootplot_format);
  auto* torsion = app.add_subcommand("torsion-check", "2-adic torsion obstruction for an x-coordinate");
  torsion->add_option("coeffs", o.coeffs, "minimal polynomial, lowest degree first, e.g. -1,1,1")->required();
  add_common(torsion, &o.format);
  auto* star = app.add_subcommand("condition-star", "condition (*) for an Alexander polynomial");
  star->add_option("coeffs", o.coeffs, "coefficients lowest degree first, e.g. 4,-7,4")->required();
  add_common(star, &o.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  Output result;
  try {
    if (norms->parsed()) result = cmd_norms(o);
    if (ramified->parsed()) result = cmd_ramified(o);
    if (sequence->parsed()) result = cmd_sequence(o);
    if (divpoly->parsed()) result = cmd_divpoly(o);
    if (verify->parsed()) result = cmd_verify(o, err);
    if (irreducible->parsed()) result = cmd_irreducible(o);
    if (rootplot->parsed()) {
      o.format = rootplot_format;
      result = cmd_rootplot(o);
    }
    if (torsion->parsed()) result = cmd_torsion(o);
    if (star->parsed()) result = cmd_condition_star(o);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const UnsupportedSize& e) {
    err << "unsupported size: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ResourceExhausted& e) {
    err << "resource exhausted: " << e.what() << "\n";
    return kResourceExhausted;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const InternalConsistency& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kVerificationFailed;
  }

  const std::string text = result.csv.empty() ? result.doc.dump(2) + "\n" : result.csv;
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "cannot write " << o.out << "\n";
      return kInvalidInput;
    }
    f << text;
  }
  return result.code;
}

}  // namespace sevenfour::cli
