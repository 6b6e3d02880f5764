// Copyright 2026 The dioph Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIOPH_CLI_HPP
#define DIOPH_CLI_HPP

// Command-line front end. Needs CLI11 and nlohmann/json (vendor/).

#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dioph/alpha_spec.hpp"
#include "dioph/counting.hpp"
#include "dioph/expansion.hpp"
#include "dioph/report_json.hpp"
#include "dioph/schedule.hpp"
#include "dioph/witness.hpp"

namespace dioph::cli {

using json::Json;

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kVerdictFailed = 2;
inline constexpr int kUsage = 64;

/// Environment variable overriding the default precision cap (bits).
inline constexpr const char* kPrecisionEnv = "DIOPH_PRECISION_CAP";

namespace detail {

inline std::uint64_t parse_count(const std::string& text, const char* what) {
  const Rational q = parse_rational(text);
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p()) {
    fail(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return q.get_num().get_ui();
}

inline std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else {
      out.emplace_back(key, *it);
    }
  }
}

/// One header line and one row per entry of report[rows_key] when given,
/// otherwise a single row of the flattened scalar fields.
inline std::string to_csv(const Json& report, const std::string& rows_key) {
  std::string out = "# config: " + report.at("config").dump() + "\n";
  std::vector<Json> rows;
  if (!rows_key.empty() && report.contains(rows_key) && report.at(rows_key).is_array()) {
    for (const auto& r : report.at(rows_key)) rows.push_back(r);
  } else {
    Json body = report;
    body.erase("config");
    rows.push_back(body);
  }
  bool header = false;
  for (const auto& r : rows) {
    std::vector<std::pair<std::string, Json>> cells;
    if (r.is_object()) {
      flatten(r, "", cells);
    } else {
      cells.emplace_back("value", r);
    }
    if (!header) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i].first;
      out += "\n";
      header = true;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i].second);
    out += "\n";
  }
  return out;
}

inline Json config_echo(const CLI::App& app, const CLI::App& sub) {
  Json cfg;
  cfg["command"] = sub.get_name();
  for (const CLI::App* a : {&app, &sub}) {
    for (const CLI::Option* opt : a->get_options()) {
      const std::string name = opt->get_single_name();
      if (name == "help" || name == "h") continue;
      if (opt->get_expected_min() == 0) {
        cfg[name] = opt->count() > 0;
      } else if (opt->count() > 0) {
        cfg[name] = opt->results().size() == 1 ? opt->results()[0] : CLI::detail::join(opt->results(), ",");
      } else if (!opt->get_default_str().empty()) {
        cfg[name] = opt->get_default_str();
      }
    }
  }
  return cfg;
}

}  // namespace detail

/// Runs one command. Reports go to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if ((args[i] == "--help" || args[i] == "-h") && args[i + 1] == "formats") {
      out << kFormatHelp;
      return kOk;
    }
  }

  CLI::App app{"Certified continued fractions, density witnesses and counting bounds.\n"
               "Use `--help formats` for the alpha, g and f expression grammar."};
  app.name("dioph");
  app.require_subcommand(1);

  std::string format = "json";
  std::string precision_cap;
  unsigned threads = 0;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--precision-cap", precision_cap, std::string("Precision cap in bits (default 65536, env ") + kPrecisionEnv + ")");
  app.add_option("--threads", threads, "Worker threads for scans (0 = hardware)")->capture_default_str();
  app.add_flag("--timing", timing, "Include elapsed_hint in reports");

  std::map<std::string, std::string> s;  // string-valued options by key
  bool flag_sin = false;
  bool flag_literal = false;
  bool flag_full = false;

  auto str = [&s](CLI::App* sub, const std::string& key, const std::string& help, const std::string& def = "",
                  bool required = false) {
    s[sub->get_name() + key] = def;
    auto* opt = sub->add_option("--" + key, s[sub->get_name() + key], help);
    if (!def.empty()) opt->capture_default_str();
    if (required) opt->required();
    return opt;
  };

  auto* expand = app.add_subcommand("expand", "Certified continued-fraction expansion");
  str(expand, "alpha", "alpha expression", "", true);
  str(expand, "terms", "number of partial quotients", "20");

  auto* classify = app.add_subcommand("classify", "Bounded or unbounded even partial quotients");
  str(classify, "alpha", "alpha expression", "", true);
  str(classify, "depth", "scan depth", "100");

  auto* hurwitz = app.add_subcommand("hurwitz", "Convergents with |x - p/q| < 1/(sqrt 5 q^2)");
  str(hurwitz, "alpha", "alpha expression", "", true);
  str(hurwitz, "k", "number of convergents scanned", "10");

  auto* wfrac = app.add_subcommand("witness-frac", "Constructive witness for {n x}^n near y");
  str(wfrac, "alpha", "alpha expression", "", true);
  str(wfrac, "y", "target in (0,1)", "", true);
  str(wfrac, "tol", "tolerance", "0.02");
  str(wfrac, "t-max", "convergent levels", "60");

  auto* wcos = app.add_subcommand("witness-cos", "Witness for |g(cos(n x))|^n near y");
  str(wcos, "alpha", "alpha expression", "", true);
  str(wcos, "g", "g expression", "poly:[0,1]");
  str(wcos, "y", "target in (0,1)", "", true);
  str(wcos, "tol", "tolerance", "0.05");
  str(wcos, "max-index", "convergents of x/(2 pi) used", "40");
  str(wcos, "max-multiplier", "largest multiplier k", "10000");
  str(wcos, "neighborhood", "offsets around k q_j", "2");
  str(wcos, "max-evaluations", "evaluation budget", "200000");
  str(wcos, "n-mod4", "required n mod 4");
  str(wcos, "m-mod2", "required m mod 2, m nearest to n x/(2 pi)");
  wcos->add_flag("--sin", flag_sin, "Use |g(sin(n x))|^n (forces n = 1 mod 4)");

  auto* wsq = app.add_subcommand("witness-square", "Witness for |g(cos(n^2 x))|^n near y");
  str(wsq, "alpha", "alpha expression", "", true);
  str(wsq, "g", "g expression", "poly:[0,1]");
  str(wsq, "y", "target in (0,1)", "", true);
  str(wsq, "tol", "tolerance (0 = best effort)", "0");
  str(wsq, "n-max", "scan range", "1000000");
  str(wsq, "seed-n-max", "range for seed pairs", "2000");
  str(wsq, "theta", "seed pair exponent", "1/2");

  auto* zp = app.add_subcommand("zpairs", "Pairs with |zeta - m/n^2| < n^-(2+theta)");
  str(zp, "zeta", "zeta expression", "", true);
  str(zp, "theta", "exponent in (0, 2/3)", "1/2");
  str(zp, "n-max", "scan range", "200");

  auto schedule_opts = [&](CLI::App* sub) {
    str(sub, "r", "threshold in (0,1)", "", true);
    str(sub, "f", "f expression", "pow:0.9");
    str(sub, "k-max", "schedule length", "3");
    str(sub, "r-prime", "margin r' in (r,1), default (1+r)/2");
    str(sub, "cap", "magnitude cap for N", "1000000000000");
    sub->add_flag("--literal-least", flag_literal, "Least N with f(N) <= 10^-d only");
  };
  auto* t4c = app.add_subcommand("construct-t4", "Build the sparse decimal alpha and its schedule");
  schedule_opts(t4c);
  auto* t4v = app.add_subcommand("verify-t4", "Certify the multiples of 10^d_{k-1} up to N_k");
  schedule_opts(t4v);
  str(t4v, "k", "level, 2 <= k <= k-max", "", true);
  t4v->add_flag("--full-count", flag_full, "Also count every n <= N_k");

  auto* cnt = app.add_subcommand("count", "Count n <= N with r < |cos(n pi x)|^n");
  str(cnt, "alpha", "alpha expression", "", true);
  str(cnt, "r", "threshold in (0,1)", "", true);
  str(cnt, "N", "range", "", true);

  auto* bnd = app.add_subcommand("bound", "Quarter-power lower bound for the count");
  str(bnd, "r", "threshold in (0,1)", "", true);
  str(bnd, "N", "range", "", true);

  auto* t5 = app.add_subcommand("verify-t5", "Check the quarter-power bound at a Hurwitz level");
  str(t5, "alpha", "alpha expression", "", true);
  str(t5, "r", "threshold in (0,1)", "", true);
  str(t5, "t", "Hurwitz level (1-based)");
  str(t5, "v", "select the level whose denominator is v");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  auto get = [&](const std::string& key) -> const std::string& { return s.at(name + key); };

  Json report;
  std::string rows_key;
  int status = kOk;
  std::string verdict_note;
  try {
    PrecisionPolicy policy;
    std::string cap_text = precision_cap;
    if (cap_text.empty()) {
      if (const char* env = std::getenv(kPrecisionEnv)) cap_text = env;
    }
    PrecisionPolicy expansion_policy = kExpansionPolicy;
    if (!cap_text.empty()) {
      const std::uint64_t cap = detail::parse_count(cap_text, "precision cap");
      if (cap < 64 || cap > (1u << 24)) fail(ErrorCode::ParseError, "precision cap must lie in 64..2^24");
      policy.cap_bits = expansion_policy.cap_bits = static_cast<Bits>(cap);
    }
    CountOptions count_options;
    count_options.threads = threads;

    if (name == "expand") {
      const RealSource x = parse_alpha(get("alpha"));
      const auto terms = detail::parse_count(get("terms"), "terms");
      report["alpha"] = x.describe();
      const auto cf = expand_real(x, terms, expansion_policy);
      report["cf"] = json::cf(cf, terms);
    } else if (name == "classify") {
      const RealSource x = parse_alpha(get("alpha"));
      const auto depth = detail::parse_count(get("depth"), "depth");
      const auto known = known_expansion(x);
      const ContinuedFraction cf = known ? *known : expand_real(x, depth + 1, expansion_policy);
      report = json::classification(classify_even_pq(cf, depth));
      report["alpha"] = x.describe();
    } else if (name == "hurwitz") {
      const RealSource x = parse_alpha(get("alpha"));
      const auto k = detail::parse_count(get("k"), "k");
      Json rows = Json::array();
      for (const auto& c : hurwitz_filter(x, k, policy)) rows.push_back(json::convergent(c));
      report["alpha"] = x.describe();
      report["k"] = k;
      report["convergents"] = std::move(rows);
      rows_key = "convergents";
    } else if (name == "witness-frac") {
      const RealSource x = parse_alpha(get("alpha"));
      report = json::witness(find_frac_witness(x, parse_rational(get("y")), parse_rational(get("tol")),
                                               detail::parse_count(get("t-max"), "t-max"), policy));
    } else if (name == "witness-cos") {
      const RealSource x = parse_alpha(get("alpha"));
      const GPoly g = parse_gpoly(get("g"));
      CosBudget b;
      b.max_index = detail::parse_count(get("max-index"), "max-index");
      b.max_multiplier = detail::parse_count(get("max-multiplier"), "max-multiplier");
      b.neighborhood = detail::parse_count(get("neighborhood"), "neighborhood");
      b.max_evaluations = detail::parse_count(get("max-evaluations"), "max-evaluations");
      std::optional<int> m2;
      if (!get("m-mod2").empty()) m2 = static_cast<int>(detail::parse_count(get("m-mod2"), "m-mod2"));
      const Rational y = parse_rational(get("y"));
      const Rational tol = parse_rational(get("tol"));
      if (flag_sin) {
        if (!get("n-mod4").empty() && detail::parse_count(get("n-mod4"), "n-mod4") != 1) {
          fail(ErrorCode::InvalidArgument, "--sin requires n = 1 (mod 4)");
        }
        report = json::witness(find_sin_witness(x, g, y, tol, b, m2, policy));
      } else {
        std::optional<Congruence> cong;
        if (!get("n-mod4").empty()) cong = Congruence{static_cast<int>(detail::parse_count(get("n-mod4"), "n-mod4")), m2};
        else if (m2) fail(ErrorCode::InvalidArgument, "--m-mod2 needs --n-mod4");
        report = json::witness(find_cos_witness(x, g, y, tol, b, cong, policy));
      }
    } else if (name == "witness-square") {
      const RealSource x = parse_alpha(get("alpha"));
      SquareBudget b;
      b.n_max = detail::parse_count(get("n-max"), "n-max");
      b.seed_n_max = detail::parse_count(get("seed-n-max"), "seed-n-max");
      b.theta = parse_rational(get("theta"));
      report = json::witness(
          find_square_witness(x, parse_gpoly(get("g")), parse_rational(get("y")), parse_rational(get("tol")), b, policy));
    } else if (name == "zpairs") {
      const RealSource z = parse_alpha(get("zeta"));
      const auto scan = zaharescu_pairs(z, parse_rational(get("theta")), detail::parse_count(get("n-max"), "n-max"), policy);
      Json rows = Json::array();
      for (const auto& [m, n] : scan.pairs) rows.push_back(Json{{"m", json::integer(m)}, {"n", json::integer(n)}});
      Json skipped = Json::array();
      for (const auto& n : scan.skipped) skipped.push_back(json::integer(n));
      report["zeta"] = z.describe();
      report["pairs"] = std::move(rows);
      report["skipped"] = std::move(skipped);
      rows_key = "pairs";
      if (!scan.skipped.empty()) err << "PrecisionExhausted: " << scan.skipped.size() << " undecided pairs skipped\n";
    } else if (name == "construct-t4" || name == "verify-t4") {
      ScheduleOptions o;
      if (!get("r-prime").empty()) o.r_prime = parse_rational(get("r-prime"));
      o.literal_least = flag_literal;
      o.magnitude_cap = parse_integer(get("cap"));
      const Rational r = parse_rational(get("r"));
      const auto built = construct_decimal_alpha(r, parse_fspec(get("f")), detail::parse_count(get("k-max"), "k-max"), o);
      report["schedule"] = json::schedule(built.schedule);
      report["alpha"] = built.alpha.describe();
      report["checks"] = json::checks(check_schedule(built.schedule));
      if (name == "verify-t4") {
        const auto v = verify_decimal_alpha(built.schedule, built.alpha, detail::parse_count(get("k"), "k"), flag_full,
                                            policy);
        report["verification"] = json::decimal_verification(v, timing);
        rows_key = "";
        if (v.inconclusive) {
          status = kError;
          verdict_note = "PrecisionExhausted: some multiples could not be decided";
        } else if (!v.all_exceed || !v.bound_dominates) {
          status = kVerdictFailed;
          verdict_note = "verification failed";
        }
      } else {
        rows_key = "";
      }
    } else if (name == "count") {
      const RealSource x = parse_alpha(get("alpha"));
      report = json::count(count_exceed(x, parse_rational(get("r")), detail::parse_count(get("N"), "N"), count_options, policy),
                           timing);
      report["alpha"] = x.describe();
    } else if (name == "bound") {
      const Rational r = parse_rational(get("r"));
      const auto n = detail::parse_count(get("N"), "N");
      const Ball b = quarter_power_bound(r, Integer(static_cast<unsigned long>(n)));
      report["N"] = n;
      report["r"] = json::rational(r);
      report["bound"] = b.mid_double();
      report["bound_rad"] = b.rad_double();
    } else if (name == "verify-t5") {
      const RealSource x = parse_alpha(get("alpha"));
      std::size_t t = 0;
      if (!get("t").empty()) {
        t = detail::parse_count(get("t"), "t");
      } else if (!get("v").empty()) {
        const Integer v = parse_integer(get("v"));
        for (std::size_t i = 1; i <= 200 && t == 0; ++i) {
          const auto c = hurwitz_convergent(x, i, policy);
          if (c.q == v) t = i;
          if (c.q > v) break;
        }
        if (t == 0) fail(ErrorCode::InvalidArgument, "no Hurwitz convergent has denominator " + v.get_str());
      } else {
        fail(ErrorCode::ParseError, "verify-t5 needs --t or --v");
      }
      const auto v = verify_quarter_power(x, parse_rational(get("r")), t, count_options, policy);
      report = json::quarter_power(v, timing);
      report["alpha"] = x.describe();
      if (!v.pass) {
        status = kVerdictFailed;
        verdict_note = "count below the bound";
      }
    }
  } catch (const SearchExhausted& e) {
    Json j{{"error", std::string(e.name())}, {"message", e.what()}};
    if (e.best()) j["best"] = json::witness(*e.best());
    j["config"] = detail::config_echo(app, *sub);
    err << e.what() << "\n";
    out << (format == "csv" ? detail::to_csv(j, "") : j.dump(2) + "\n");
    return kError;
  } catch (const Error& e) {
    const bool usage = e.code() == ErrorCode::ParseError;
    Json j{{"error", std::string(e.name())}, {"message", e.what()}};
    j["config"] = detail::config_echo(app, *sub);
    err << e.what() << "\n";
    out << (format == "csv" ? detail::to_csv(j, "") : j.dump(2) + "\n");
    return usage ? kUsage : kError;
  }

  report["config"] = detail::config_echo(app, *sub);
  out << (format == "csv" ? detail::to_csv(report, rows_key) : report.dump(2) + "\n");
  if (!verdict_note.empty()) err << verdict_note << "\n";
  return status;
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace dioph::cli

#endif  // DIOPH_CLI_HPP
