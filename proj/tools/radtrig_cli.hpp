#pragma once

// Command-line front end. run() takes the arguments after the program name so
// the whole CLI can be driven in-process by the tests.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radtrig/antiderivatives.hpp"
#include "radtrig/cardioid.hpp"
#include "radtrig/globalize.hpp"
#include "radtrig/io.hpp"
#include "radtrig/quadrature.hpp"
#include "radtrig/trig_kernel.hpp"
#include "radtrig/verify.hpp"

namespace radtrig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

inline constexpr double kDiscrepancyLimit = 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Family parse_family(const std::string& s) {
  if (s == "sin" || s == "sine") return Family::Sine;
  if (s == "cos" || s == "cosine") return Family::Cosine;
  throw UsageError("unknown family '" + s + "' (expected sin or cos)");
}

inline Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  throw UsageError("unknown sign '" + s + "' (expected + or -)");
}

inline double parse_angle_or_throw(const std::string& name,
                                   const std::string& text) {
  if (auto v = io::parse_angle(text)) return *v;
  throw UsageError("invalid angle for " + name + ": '" + text + "'");
}

inline Method parse_method(const std::string& s) {
  for (Method m : kAllMethods) {
    if (to_string(m) == s) return m;
  }
  throw UsageError("unknown method '" + s + "'");
}

/// Form name plus the sign it implies, if any (I1 is the + floor form, I2 the
/// − one).
inline Form parse_form(const std::string& s, Sign sign) {
  if (s == "A") return Form::A_Rationalized;
  if (s == "B") return Form::B_HalfAngle;
  if (s == "C1") return Form::C1_ShiftForward;
  if (s == "C2") return Form::C2_ShiftBackward;
  if (s == "floor" || s == "G1") return Form::G_FloorShiftForward;
  if (s == "ceil" || s == "G2") return Form::G_FloorShiftBackward;
  if (s == "I1" || s == "I2") {
    const Sign implied = s == "I1" ? Sign::Plus : Sign::Minus;
    if (implied != sign) {
      throw UsageError(s + " is the floor form for sign " +
                       (implied == Sign::Plus ? "+" : "-"));
    }
    return Form::G_FloorShiftForward;
  }
  throw UsageError("unknown form '" + s + "'");
}

inline SignCarrier parse_carrier(const std::string& s) {
  if (s == "cos") return SignCarrier::cos_x();
  if (s == "sin") return SignCarrier::sin_x();
  if (s == "coshalf+sinhalf") return SignCarrier::cos_half_plus_sin_half();
  if (s == "coshalf-sinhalf") return SignCarrier::cos_half_minus_sin_half();
  if (s == "sinhalf") return SignCarrier::sin_half();
  if (s == "coshalf") return SignCarrier::cos_half();
  throw UsageError("unknown carrier kind '" + s + "'");
}

inline std::string integrand_name(const IntegrandSpec& spec) {
  return "sqrt(" + to_string(spec) + " x)";
}

/// Key/value lines describing one command's result.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string method;
  std::vector<std::pair<std::string, double>> values;
  std::optional<double> oracle;
  std::optional<double> discrepancy;

  void print(std::ostream& out) const {
    out << "command: " << command << '\n';
    for (const auto& [k, v] : inputs) out << k << ": " << v << '\n';
    out << "method: " << method << '\n';
    for (const auto& [k, v] : values) out << k << ": " << io::format_number(v) << '\n';
    if (oracle) out << "oracle: " << io::format_number(*oracle) << '\n';
    if (discrepancy) {
      out << "discrepancy: " << io::format_number(*discrepancy) << '\n';
    }
  }
};

namespace detail {

inline std::string join(const std::vector<std::string>& args) {
  std::string out = "radtrig";
  for (const auto& a : args) out += " " + a;
  return out;
}

struct PlotOptions {
  std::string target;
  double a = 1.0;
  std::string trig = "sin";
  std::string family = "sin";
  std::string sign = "+";
  std::string kind = "cos";
  std::string form = "B";
  bool global = false;
  std::string from = "0";
  std::string to = "2pi";
  int samples = 1024;
  std::string format = "csv";
  std::string out;
};

inline void emit_plot(const PlotOptions& o, std::ostream& out) {
  const int n = o.samples;
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
  std::vector<std::pair<double, double>> markers;

  if (o.target == "cardioid") {
    const Cardioid c(o.a, parse_family(o.trig), parse_sign(o.sign));
    std::vector<double> xs, ys;
    for (const Point& p : sample_curve(c, n)) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    header = {"x", "y"};
    columns = {xs, ys};
  } else {
    const double from = parse_angle_or_throw("--from", o.from);
    const double to = parse_angle_or_throw("--to", o.to);
    if (!(from < to)) throw UsageError("--from must be below --to");
    std::vector<double> thetas;
    for (int k = 0; k <= n; ++k) thetas.push_back(from + (to - from) * k / n);

    if (o.target == "abs-carrier") {
      const SignCarrier carrier = parse_carrier(o.kind);
      if (to - from > kMaxBreakpointSpan) throw UsageError("range too wide");
      // Zeros on the closed range, merged into the sample grid.
      std::vector<double> zeros = breakpoints(carrier, from, to);
      for (double end : {from, to}) {
        if (lattice_index_at(carrier.zeros(), end)) zeros.push_back(end);
      }
      std::vector<double> flags(thetas.size(), 0.0);
      for (double z : zeros) {
        auto it = std::find_if(thetas.begin(), thetas.end(), [z](double t) {
          return std::abs(t - z) <= 1e-12 * std::max(1.0, std::abs(z));
        });
        if (it == thetas.end()) {
          it = thetas.insert(std::upper_bound(thetas.begin(), thetas.end(), z), z);
          flags.insert(flags.begin() + (it - thetas.begin()), 0.0);
        }
        flags[it - thetas.begin()] = 1.0;
        markers.emplace_back(z, 0.0);
      }
      std::sort(markers.begin(), markers.end());
      std::vector<double> values;
      for (std::size_t i = 0; i < thetas.size(); ++i) {
        values.push_back(flags[i] != 0.0 ? 0.0 : std::abs(carrier(thetas[i])));
      }
      header = {"theta", "value", "zero"};
      columns = {thetas, values, flags};
    } else if (o.target == "antiderivative") {
      const IntegrandSpec spec{parse_family(o.family), parse_sign(o.sign)};
      const ClosedForm cf{spec, parse_form(o.form, spec.sign)};
      std::vector<double> values;
      if (o.global && cf.is_local()) {
        const PiecewiseAntiderivative g(cf, default_base(cf));
        for (double t : thetas) values.push_back(g(t));
      } else {
        for (double t : thetas) values.push_back(eval_closed_form(cf, t));
      }
      header = {"theta", "value"};
      columns = {thetas, values};
    } else {
      throw UsageError("unknown plot target '" + o.target + "'");
    }
  }

  if (o.format == "csv") {
    io::write_csv(out, header, columns);
  } else {
    io::write_svg(out, {columns[0], columns[1]}, markers);
  }
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Closed-form antiderivatives of sqrt(1 +- sin x) and "
               "sqrt(1 +- cos x), definite integrals and cardioid lengths."};
  app.name("radtrig");
  app.require_subcommand(1);

  const std::vector<std::string> families = {"sin", "sine", "cos", "cosine"};
  const std::vector<std::string> signs = {"+", "-", "plus", "minus"};
  const std::vector<std::string> methods = {"global", "split", "floor", "oracle"};

  std::string family, sign, x_text, form_name;
  std::string from_text, to_text, method_name = "global";
  std::string trig = "sin";
  std::string scope = "all";
  double scale = 1.0;
  bool verify_flag = false;
  bool global_flag = false;

  auto* eval = app.add_subcommand("eval", "Evaluate the integrand");
  eval->add_option("--family", family, "sin or cos")->required()->check(CLI::IsMember(families));
  eval->add_option("--sign", sign, "+ or -")->required()->check(CLI::IsMember(signs));
  eval->add_option("--x", x_text, "Angle in radians or as a multiple of pi")->required();

  auto* anti = app.add_subcommand("antideriv", "Evaluate a closed-form antiderivative");
  anti->add_option("--form", form_name, "A, B, C1, C2, floor, ceil, I1 or I2")->required();
  anti->add_option("--family", family, "sin or cos")->required()->check(CLI::IsMember(families));
  anti->add_option("--sign", sign, "+ or -")->required()->check(CLI::IsMember(signs));
  anti->add_option("--x", x_text, "Angle")->required();
  anti->add_flag("--global", global_flag, "Make a local form continuous");

  auto* integ = app.add_subcommand("integrate", "Definite integral of the integrand");
  integ->add_option("--family", family, "sin or cos")->required()->check(CLI::IsMember(families));
  integ->add_option("--sign", sign, "+ or -")->required()->check(CLI::IsMember(signs));
  integ->add_option("--from", from_text, "Lower limit")->required();
  integ->add_option("--to", to_text, "Upper limit")->required();
  integ->add_option("--method", method_name, "global, split, floor or oracle")
      ->check(CLI::IsMember(methods));
  integ->add_flag("--verify", verify_flag, "Compare against adaptive quadrature");

  auto* card = app.add_subcommand("cardioid", "Arc length of r = a(1 +- trig theta)");
  card->add_option("--a", scale, "Scale a > 0")->required()->check(CLI::PositiveNumber);
  card->add_option("--trig", trig, "sin or cos")->check(CLI::IsMember(families));
  card->add_option("--sign", sign, "+ or -")->required()->check(CLI::IsMember(signs));
  card->add_option("--method", method_name, "global, split, floor or oracle")
      ->check(CLI::IsMember(methods));
  card->add_flag("--verify", verify_flag, "Compare against adaptive quadrature");

  detail::PlotOptions plot_opts;
  auto* plot = app.add_subcommand("plot", "Write plot data as CSV or SVG");
  plot->add_option("target", plot_opts.target, "cardioid, abs-carrier or antiderivative")
      ->required()
      ->check(CLI::IsMember({"cardioid", "abs-carrier", "antiderivative"}));
  plot->add_option("--a", plot_opts.a, "Cardioid scale")->check(CLI::PositiveNumber);
  plot->add_option("--trig", plot_opts.trig, "Cardioid trig function")->check(CLI::IsMember(families));
  plot->add_option("--family", plot_opts.family, "Integrand family")->check(CLI::IsMember(families));
  plot->add_option("--sign", plot_opts.sign, "+ or -")->check(CLI::IsMember(signs));
  plot->add_option("--kind", plot_opts.kind,
                   "cos, sin, coshalf+sinhalf, coshalf-sinhalf, sinhalf, coshalf")
      ->check(CLI::IsMember({"cos", "sin", "coshalf+sinhalf", "coshalf-sinhalf",
                             "sinhalf", "coshalf"}));
  plot->add_option("--form", plot_opts.form, "Antiderivative form");
  plot->add_flag("--global", plot_opts.global, "Make a local form continuous");
  plot->add_option("--from", plot_opts.from, "Start angle");
  plot->add_option("--to", plot_opts.to, "End angle");
  plot->add_option("--samples", plot_opts.samples, "Number of segments")
      ->check(CLI::Range(3, 10'000'000));
  plot->add_option("--format", plot_opts.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  plot->add_option("--out", plot_opts.out, "Output path (default: stdout)");

  auto* ver = app.add_subcommand("verify", "Run the invariant suites");
  ver->add_option("--scope", scope, "all, forms, av or cardioid")
      ->check(CLI::IsMember({"all", "forms", "av", "cardioid"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string echo = detail::join(args);
  try {
    if (eval->parsed()) {
      const IntegrandSpec spec{parse_family(family), parse_sign(sign)};
      out << io::format_number(eval_integrand(spec, parse_angle_or_throw("--x", x_text)))
          << '\n';
      return kExitOk;
    }

    if (anti->parsed()) {
      const IntegrandSpec spec{parse_family(family), parse_sign(sign)};
      const ClosedForm cf{spec, parse_form(form_name, spec.sign)};
      const double x = parse_angle_or_throw("--x", x_text);
      double value = 0.0;
      if (global_flag && cf.is_local()) {
        value = globalize(cf, default_base(cf))(x);
      } else {
        value = eval_closed_form(cf, x);
      }
      out << io::format_number(value) << '\n';
      return kExitOk;
    }

    if (integ->parsed()) {
      const IntegrandSpec spec{parse_family(family), parse_sign(sign)};
      const double a = parse_angle_or_throw("--from", from_text);
      const double b = parse_angle_or_throw("--to", to_text);
      const Method method = parse_method(method_name);
      OutputRecord rec;
      rec.command = echo;
      rec.inputs = {{"integrand", integrand_name(spec)},
                    {"from", io::format_number(a)},
                    {"to", io::format_number(b)}};
      rec.method = to_string(method);
      const double value = definite_integral(spec, a, b, method);
      rec.values = {{"value", value}};
      int code = kExitOk;
      if (verify_flag) {
        rec.oracle = definite_integral(spec, a, b, Method::Oracle);
        rec.discrepancy = std::abs(value - *rec.oracle);
        if (*rec.discrepancy > kDiscrepancyLimit) code = kExitVerifyFailed;
      }
      rec.print(out);
      return code;
    }

    if (card->parsed()) {
      const Cardioid c(scale, parse_family(trig), parse_sign(sign));
      const Method method = parse_method(method_name);
      OutputRecord rec;
      rec.command = echo;
      rec.inputs = {{"curve", "r = " + io::format_number(scale) + "(1" +
                                  (c.sign() == Sign::Plus ? "+" : "-") +
                                  (c.trig() == Family::Sine ? "sin" : "cos") +
                                  " theta)"}};
      rec.method = to_string(method);
      const double value = length(c, method);
      rec.values = {{"length", value}};
      int code = kExitOk;
      if (verify_flag) {
        rec.oracle = length(c, Method::Oracle);
        rec.discrepancy = std::abs(value - *rec.oracle);
        if (*rec.discrepancy > kDiscrepancyLimit) code = kExitVerifyFailed;
      }
      rec.print(out);
      return code;
    }

    if (plot->parsed()) {
      if (plot_opts.out.empty()) {
        detail::emit_plot(plot_opts, out);
        return kExitOk;
      }
      std::ostringstream buffer;
      detail::emit_plot(plot_opts, buffer);
      std::ofstream file(plot_opts.out, std::ios::binary);
      if (!file) throw IoError("cannot open '" + plot_opts.out + "' for writing");
      file << buffer.str();
      file.close();
      if (!file) throw IoError("failed writing '" + plot_opts.out + "'");
      return kExitOk;
    }

    if (ver->parsed()) {
      verify::Scope s = verify::Scope::All;
      if (scope == "forms") s = verify::Scope::Forms;
      if (scope == "av") s = verify::Scope::Av;
      if (scope == "cardioid") s = verify::Scope::Cardioid;
      const auto results = verify::run_checks(s);
      std::size_t passed = 0;
      for (const auto& r : results) {
        char line[256];
        std::snprintf(line, sizeof line, "%s  %-48s worst=%-10.3g tol=%.0e\n",
                      r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst,
                      r.tolerance);
        out << line;
        passed += r.passed ? 1 : 0;
      }
      out << "summary: " << passed << "/" << results.size() << " passed\n";
      return passed == results.size() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace radtrig::cli
