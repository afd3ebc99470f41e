#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "surd/approximant.hpp"
#include "surd/errors.hpp"
#include "surd/error_analysis.hpp"
#include "surd/roots.hpp"
#include "surd/serialize.hpp"
#include "surd/series.hpp"

namespace surd::cli {
namespace {

using nlohmann::json;

const char* yes_no(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string decimal_pair(const Interval& i, int places) {
  return "[" + to_decimal(i.lo(), places).str() + ", " + to_decimal(i.hi(), places).str() + "]";
}

std::string scientific_pair(const Interval& i, int significant) {
  return "[" + to_scientific(i.lo(), significant) + ", " + to_scientific(i.hi(), significant) + "]";
}

void print_form(const SurdForm& f, std::ostream& out) {
  const int k = f.root();
  out << "root k = " << k << "\n"
      << "A = " << f.a().str() << "\n"
      << "B = " << f.b().str() << "\n"
      << "C = " << f.c().str() << "\n"
      << "D = " << f.d().str() << "\n"
      << "E = " << f.e().str() << "\n"
      << "S = (" << f.a().str() << ")*N + (" << f.b().str() << ")*M/N^" << (k - 1) << " + "
      << f.c().str() << "*N*x/(" << f.d().str() << "*M + " << f.e().str() << "*N^" << k
      << "),  M = N^" << k << " + x\n";
}

int cmd_derive(int k, bool as_json, std::ostream& out) {
  const SurdForm form = derive(k);
  const ConsistencyReport next = check_next_order(form);
  if (as_json) {
    json j = to_json(form);
    j["next_order"] = to_json(next);
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  print_form(form, out);
  out << "next order: required D/(D+E) = " << next.required_ratio.str()
      << ", actual D/(D+E) = " << next.actual_ratio.str() << " -> "
      << (next.consistent ? "consistent" : "inconsistent") << "\n";
  return kSuccess;
}

int cmd_eval(int k, const Rational& n, const Rational& x, int places, bool as_json,
             std::ostream& out) {
  const SurdForm form = derive(k);
  const Rational s = evaluate(form, n, x);
  if (as_json) {
    out << json{{"k", k},
                {"N", n.str()},
                {"x", x.str()},
                {"S", s.str()},
                {"S_decimal", to_json(to_decimal(s, places))}}
               .dump(2)
        << "\n";
    return kSuccess;
  }
  out << "N = " << n.str() << ", x = " << x.str() << ", M = " << (n.pow(k) + x).str() << "\n"
      << "S = " << s.str() << "\n"
      << "S ~ " << to_decimal(s, places).str() << "\n";
  return kSuccess;
}

int cmd_error(int k, const Rational& n, const Rational& x, int digits, bool as_json,
              std::ostream& out) {
  const ErrorReport report = analyze(derive(k), n, x, digits);
  if (as_json) {
    out << to_json(report, digits).dump(2) << "\n";
    return kSuccess;
  }
  out << "N = " << n.str() << ", x = " << x.str() << ", k = " << k << "\n"
      << "true error      in " << decimal_pair(report.true_error, digits) << "\n"
      << "                   " << scientific_pair(report.true_error, 7) << "\n"
      << "error bracket   in " << decimal_pair(report.formula_enclosure, digits) << "\n"
      << "                   " << scientific_pair(report.formula_enclosure, 7) << "\n"
      << "overestimates:     "
      << (report.overestimates ? (*report.overestimates ? "yes (proven)" : "no (x = 0)")
                               : "not proven")
      << "\n";
  return kSuccess;
}

int cmd_window(int places, bool as_json, std::ostream& out) {
  const Window w = overestimate_window();
  if (as_json) {
    out << to_json(w, places).dump(2) << "\n";
    return kSuccess;
  }
  out << "overestimation window for t = x/N^4:\n"
      << "lower = " << w.lower.str() << " ~ " << to_decimal(w.lower, places).str() << "\n"
      << "upper in " << w.upper.str() << "\n"
      << "         " << decimal_pair(w.upper, places) << "\n"
      << "width  = " << to_scientific(w.upper.width(), 4) << "\n";
  return kSuccess;
}

int cmd_bound(const Rational& p, const std::string& sign, bool as_json, std::ostream& out) {
  Side side;
  if (sign == "pos" || sign == "positive") {
    side = Side::positive;
  } else if (sign == "neg" || sign == "negative") {
    side = Side::negative;
  } else {
    throw ArgumentError("--sign must be pos or neg, got '" + sign + "'");
  }
  const Interval b = percent_bound(p, side);
  const bool regime = percent_within_window(p, side);
  // N / divisor with divisor = 1/hi, rounded down, is a safe restatement.
  const std::string divisor = to_scientific(b.hi().reciprocal(), 7);
  if (as_json) {
    out << json{{"p", p.str()},
                {"sign", side == Side::positive ? "positive" : "negative"},
                {"bound", to_json(b)},
                {"bound_scientific", json::array({to_scientific(b.lo(), 7), to_scientific(b.hi(), 7)})},
                {"divisor", divisor},
                {"within_window", regime}}
               .dump(2)
        << "\n";
    return kSuccess;
  }
  out << "p = " << p.str() << "%, x " << (side == Side::positive ? "positive" : "negative") << "\n"
      << "|E| < b*N with b in " << scientific_pair(b, 7) << "\n"
      << "i.e. |E| < N/" << divisor << "\n"
      << "range within proven window: " << (regime ? "yes" : "no") << "\n";
  return kSuccess;
}

int cmd_verify_tripos(bool as_json, std::ostream& out) {
  const TriposVerification v = verify_tripos();
  if (as_json) {
    json checks = json::array();
    for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"N", "10"},
                {"x", "1"},
                {"S", v.approximation.str()},
                {"true_error", to_json(v.true_error)},
                {"true_error_scientific", to_scientific(v.true_error.lo(), 7)},
                {"formula_enclosure", to_json(v.formula_enclosure)},
                {"bound", v.bound.str()},
                {"bound_scientific", to_scientific(v.bound, 7)},
                {"checks", checks},
                {"passed", v.passed()}}
               .dump(2)
        << "\n";
    return v.passed() ? kSuccess : kVerificationFailed;
  }
  out << "fourth root of M = N^4 + x with N = 10, x = 1\n"
      << "S      = " << v.approximation.str() << "\n"
      << "E      in " << decimal_pair(v.true_error, 24) << "\n"
      << "       ~ " << to_scientific(v.true_error.lo(), 7) << "\n"
      << "bound  = " << to_decimal(v.bound, 24).str() << "\n"
      << "       ~ " << to_scientific(v.bound, 7) << "\n"
      << "note: the Lagrange remainder term carries (x/N^4)^4, not x/N^4\n";
  for (const auto& c : v.checks) out << yes_no(c.passed) << "  " << c.name << ": " << c.detail << "\n";
  out << (v.passed() ? "PASS" : "FAIL") << "\n";
  return v.passed() ? kSuccess : kVerificationFailed;
}

int cmd_sweep(const SweepOptions& options, bool as_json, std::ostream& out) {
  const auto rows = sweep(options);
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"t", r.t.str()},
                     {"taylor_error", r.taylor_error.str()},
                     {"surd_error", r.surd_error.str()},
                     {"ratio", r.ratio},
                     {"in_window", r.in_window}});
    }
    out << arr.dump(2) << "\n";
    return kSuccess;
  }
  out << "t,taylor_error,surd_error,ratio,in_window\n";
  for (const auto& r : rows) {
    out << r.t.str() << "," << r.taylor_error.str() << "," << r.surd_error.str() << "," << r.ratio
        << "," << r.in_window << "\n";
  }
  return kSuccess;
}

Rational parse_number(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const ArgumentError&) {
    throw ArgumentError(std::string("invalid value for ") + what + ": '" + text + "'");
  }
}

}  // namespace

bool TriposVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

TriposVerification verify_tripos() {
  const Rational n = 10;
  const Rational x = 1;
  const SurdForm form = derive(4);

  TriposVerification v;
  v.approximation = evaluate(form, n, x);
  v.true_error = true_error(form, n, x, 24);
  v.formula_enclosure = formula_enclosure(n, x);
  // The X = 0 end is the exact, most negative end of the bracket.
  v.bound = -v.formula_enclosure.lo();

  const Rational expected_s{1920160001, 192011200};
  v.checks.push_back({"exact fraction", v.approximation == expected_s,
                      v.approximation.str() + " vs " + expected_s.str()});

  const std::string e_lo = to_scientific(v.true_error.lo(), 7);
  const std::string e_hi = to_scientific(v.true_error.hi(), 7);
  v.checks.push_back({"true error digits", e_lo == "-5.695655e-18" && e_hi == "-5.695655e-18",
                      e_lo + " .. " + e_hi + " vs -5.695655e-18"});

  v.checks.push_back({"16 places", v.true_error.magnitude() < pow10(-16),
                      "|E| < 1e-16"});
  v.checks.push_back({"misses 17 places", v.true_error.hi() < Rational(-5) * pow10(-18),
                      "|E| > 5e-18"});
  v.checks.push_back({"overestimate", v.true_error.hi().sign() < 0, "E < 0"});

  const std::string b = to_scientific(v.bound, 7);
  v.checks.push_back({"bound digits", b == "5.698475e-18", b + " vs 5.698475e-18"});

  const Interval gap = Interval(v.bound) + v.true_error;  // bound - |E|, E < 0
  v.checks.push_back({"bound meets error", gap.magnitude() < pow10(-20),
                      "|bound - |E|| <= " + to_scientific(gap.magnitude(), 4) + " < 1e-20"});

  v.checks.push_back({"containment", v.formula_enclosure.widened(v.true_error.width()).contains(v.true_error),
                      "E inside the closed-form bracket"});
  return v;
}

std::vector<SweepRow> sweep(const SweepOptions& o) {
  if (o.root < 2) throw ArgumentError("root index must be >= 2");
  if (o.steps < 0) throw ArgumentError("steps must be >= 0");
  if (o.digits < 0 || o.ratio_places < 0) throw ArgumentError("digits must be >= 0");
  if (o.t_max < o.t_min) throw ArgumentError("t-max must be >= t-min");
  if (o.steps == 0 && o.t_max != o.t_min) throw ArgumentError("steps = 0 needs t-min = t-max");
  if (o.t_min <= -1) throw DomainError("t must be > -1");
  if (o.n.sign() <= 0) throw DomainError("N must be > 0");

  const SurdForm form = derive(o.root);
  const Rational alpha = Rational(1) / o.root;
  const auto taylor = make_truncation(alpha, 3);
  const Rational nk = o.n.pow(o.root);
  const Rational eps = pow10(-(o.digits + 10));

  std::vector<SweepRow> rows;
  for (int i = 0; i <= o.steps; ++i) {
    const Rational t = o.steps == 0 ? o.t_min : o.t_min + (o.t_max - o.t_min) * i / o.steps;
    const Interval root = nth_root_interval(1 + t, o.root, eps);
    const Interval taylor_err = Interval(o.n) * (root - Interval(taylor(t)));
    const Interval surd_err = true_error(form, o.n, t * nk, o.digits + 10);

    SweepRow row;
    row.t = t;
    row.taylor_error = to_decimal(taylor_err.midpoint(), o.digits);
    row.surd_error = to_decimal(surd_err.midpoint(), o.digits);
    if (!taylor_err.contains_zero()) {
      row.ratio = to_decimal(surd_err.midpoint().abs() / taylor_err.midpoint().abs(), o.ratio_places)
                      .str();
    }
    if (o.root == 4) row.in_window = in_window(t) ? "true" : "false";
    rows.push_back(std::move(row));
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact surd approximants of k-th roots with rigorous error bounds", "surd"};
  app.require_subcommand(1);

  int root = 4;
  std::string n_text = "10";
  std::string x_text = "1";
  int digits = 24;
  int places = 24;
  bool as_json = false;

  auto* derive_cmd = app.add_subcommand("derive", "Derive the approximant coefficients for a root index");
  derive_cmd->add_option("-k,--root", root, "Root index k >= 2")->capture_default_str();
  derive_cmd->add_flag("--json", as_json, "JSON output");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the approximant exactly");
  eval_cmd->add_option("-k,--root", root, "Root index k >= 2")->capture_default_str();
  eval_cmd->add_option("-N,--n", n_text, "N > 0 (p/q or decimal)")->capture_default_str();
  eval_cmd->add_option("-x,--x", x_text, "Offset x with M = N^k + x")->capture_default_str();
  eval_cmd->add_option("--places", places, "Decimal places for the rendering")->capture_default_str();
  eval_cmd->add_flag("--json", as_json, "JSON output");

  auto* error_cmd = app.add_subcommand("error", "Enclose the true error and its closed-form bracket");
  error_cmd->add_option("-k,--root", root, "Root index k >= 2")->capture_default_str();
  error_cmd->add_option("-N,--n", n_text, "N > 0 (p/q or decimal)")->capture_default_str();
  error_cmd->add_option("-x,--x", x_text, "Offset x with M = N^k + x")->capture_default_str();
  error_cmd->add_option("--digits", digits, "Enclosure width 10^-digits")->capture_default_str();
  error_cmd->add_flag("--json", as_json, "JSON output");

  auto* window_cmd = app.add_subcommand("window", "Overestimation window of the fourth-root form");
  int window_places = 10;
  window_cmd->add_option("--places", window_places, "Decimal places")->capture_default_str();
  window_cmd->add_flag("--json", as_json, "JSON output");

  auto* bound_cmd = app.add_subcommand("bound", "Error bound when |x| is below p percent");
  std::string p_text;
  std::string sign = "pos";
  bound_cmd->add_option("-p,--percent", p_text, "Percentage p > 0")->required();
  bound_cmd->add_option("--sign", sign, "Sign of x: pos or neg")->capture_default_str();
  bound_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify-tripos", "Check the N = 10, x = 1 fourth-root claim");
  verify_cmd->add_flag("--json", as_json, "JSON output");

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV table of Taylor and surd errors over t = x/N^k");
  SweepOptions sweep_options;
  std::string t_min_text = "0";
  std::string t_max_text = "1/20";
  std::string sweep_n_text = "1";
  bool as_csv = false;
  sweep_cmd->add_option("-k,--root", sweep_options.root, "Root index k >= 2")->capture_default_str();
  sweep_cmd->add_option("-N,--n", sweep_n_text, "N > 0; errors scale linearly in N")->capture_default_str();
  sweep_cmd->add_option("--t-min", t_min_text, "First t")->capture_default_str();
  sweep_cmd->add_option("--t-max", t_max_text, "Last t")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep_options.steps, "Number of intervals")->capture_default_str();
  sweep_cmd->add_option("--digits", sweep_options.digits, "Decimal places for errors")->capture_default_str();
  sweep_cmd->add_option("--ratio-places", sweep_options.ratio_places, "Decimal places for the ratio")
      ->capture_default_str();
  sweep_cmd->add_flag("--csv", as_csv, "CSV output (default)");
  sweep_cmd->add_flag("--json", as_json, "JSON output");

  std::vector<const char*> argv{"surd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*derive_cmd) return cmd_derive(root, as_json, out);
    if (*eval_cmd) {
      return cmd_eval(root, parse_number(n_text, "N"), parse_number(x_text, "x"), places, as_json, out);
    }
    if (*error_cmd) {
      if (digits < 0) throw ArgumentError("--digits must be >= 0");
      return cmd_error(root, parse_number(n_text, "N"), parse_number(x_text, "x"), digits, as_json, out);
    }
    if (*window_cmd) {
      if (window_places < 0) throw ArgumentError("--places must be >= 0");
      return cmd_window(window_places, as_json, out);
    }
    if (*bound_cmd) return cmd_bound(parse_number(p_text, "percent"), sign, as_json, out);
    if (*verify_cmd) return cmd_verify_tripos(as_json, out);
    if (*sweep_cmd) {
      if (as_csv && as_json) throw ArgumentError("--csv and --json are exclusive");
      sweep_options.n = parse_number(sweep_n_text, "N");
      sweep_options.t_min = parse_number(t_min_text, "t-min");
      sweep_options.t_max = parse_number(t_max_text, "t-max");
      return cmd_sweep(sweep_options, as_json, out);
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace surd::cli
