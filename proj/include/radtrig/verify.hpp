#pragma once

// Invariant suites behind `radtrig verify`. Each check reports the worst
// deviation it saw against a fixed tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "radtrig/antiderivatives.hpp"
#include "radtrig/cardioid.hpp"
#include "radtrig/globalize.hpp"
#include "radtrig/quadrature.hpp"
#include "radtrig/trig_kernel.hpp"

namespace radtrig::verify {

enum class Scope { All, Forms, Av, Cardioid };

struct CheckResult {
  std::string name;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Seeded uniform doubles. mt19937_64 output is fixed by the standard; the
/// conversion to [0, 1) is done here so the stream is identical everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

inline double distance_to_lattice(const ZeroLattice& lattice, double x) {
  const double k = std::round((x - lattice.origin()) / lattice.period());
  return std::abs(x - lattice.point(k));
}

/// Symmetric difference quotient.
template <class F>
double symmetric_difference(const F& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

namespace detail {

inline CheckResult make(std::string name, double worst, double tolerance) {
  return {std::move(name), worst, tolerance, worst < tolerance};
}

inline constexpr std::uint64_t kSeed = 0x5eed2014;
inline constexpr double kGridLo = -4.0 * pi;
inline constexpr double kGridHi = 4.0 * pi;

/// Breakpoints of the carrier in [lo, hi], including lattice zeros that land
/// on the ends.
inline std::vector<double> zeros_in(const SignCarrier& carrier, double lo,
                                    double hi) {
  std::vector<double> out = breakpoints(carrier, lo - 1e-6, hi + 1e-6);
  return out;
}

inline void derivative_checks(std::vector<CheckResult>& out) {
  Sampler rng(kSeed);
  for (const IntegrandSpec spec : kAllSpecs) {
    for (const Form form : kAllForms) {
      const ClosedForm cf{spec, form};
      const ZeroLattice lattice = sign_carrier(cf).zeros();
      const auto fn = [&cf](double x) { return eval_closed_form(cf, x); };
      double worst = 0.0;
      int taken = 0;
      while (taken < 1000) {
        const double x = rng.uniform(kGridLo, kGridHi);
        if (distance_to_lattice(lattice, x) <= 1e-3) continue;
        const double expected = eval_integrand(spec, x);
        const double got = symmetric_difference(fn, x);
        worst = std::max(worst, std::abs(got - expected) / expected);
        ++taken;
      }
      out.push_back(make("derivative " + to_string(cf), worst, 1e-5));
    }
  }
}

inline void continuity_checks(std::vector<CheckResult>& out) {
  constexpr double eps = 1e-9;
  for (const IntegrandSpec spec : kAllSpecs) {
    for (const Form form : kAllForms) {
      const ClosedForm cf{spec, form};
      double worst = 0.0;
      if (cf.is_local()) {
        const PiecewiseAntiderivative g(cf, default_base(cf));
        for (double b : zeros_in(sign_carrier(cf), kGridLo, kGridHi)) {
          worst = std::max(worst, std::abs(g(b + eps) - g(b - eps)));
        }
        out.push_back(make("continuity globalized " + to_string(cf), worst, 1e-6));
      } else {
        for (double b : zeros_in(sign_carrier(cf), kGridLo, kGridHi)) {
          worst = std::max(worst, std::abs(eval_global_floor_form(cf, b + eps) -
                                           eval_global_floor_form(cf, b - eps)));
        }
        out.push_back(make("continuity " + to_string(cf), worst, 1e-6));
      }
    }
  }
}

/// max − min of f − g over an n-point grid.
template <class F, class G>
double constant_offset_spread(const F& f, const G& g, double lo, double hi,
                              int n) {
  double lo_diff = INFINITY;
  double hi_diff = -INFINITY;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * (i + 0.5) / n;
    const double d = f(x) - g(x);
    lo_diff = std::min(lo_diff, d);
    hi_diff = std::max(hi_diff, d);
  }
  return hi_diff - lo_diff;
}

inline void agreement_checks(std::vector<CheckResult>& out) {
  for (const IntegrandSpec spec : kAllSpecs) {
    const ClosedForm floor_form{spec, Form::G_FloorShiftForward};
    const auto floor_fn = [&](double x) {
      return eval_global_floor_form(floor_form, x);
    };
    double worst = 0.0;
    for (const Form form : kLocalForms) {
      const ClosedForm cf{spec, form};
      const PiecewiseAntiderivative g(cf, default_base(cf));
      worst = std::max(worst, constant_offset_spread(g, floor_fn, kGridLo,
                                                     kGridHi, 10000));
    }
    const ClosedForm ceil_form{spec, Form::G_FloorShiftBackward};
    worst = std::max(
        worst, constant_offset_spread(
                   [&](double x) { return eval_global_floor_form(ceil_form, x); },
                   floor_fn, kGridLo, kGridHi, 10000));
    out.push_back(make("globalized vs floor " + to_string(spec), worst, 1e-9));
  }
}

inline void jump_checks(std::vector<CheckResult>& out) {
  const ClosedForm a_form{{Family::Sine, Sign::Plus}, Form::A_Rationalized};
  out.push_back(make("jump A[1+sin] at 3pi/2",
                     std::abs(jump_at(a_form, 1.5 * pi) + 4.0 * sqrt2), 1e-10));
  out.push_back(make("jump A[1+sin] at pi/2",
                     std::abs(jump_at(a_form, 0.5 * pi)), 1e-10));
}

inline void breakpoint_checks(std::vector<CheckResult>& out) {
  const auto mismatch = [](const std::vector<double>& got,
                           const std::vector<double>& want) -> double {
    if (got.size() != want.size()) return INFINITY;
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
      worst = std::max(worst, std::abs(got[i] - want[i]));
    }
    return worst;
  };
  const double two_pi = 2.0 * pi;
  out.push_back(make("zeros cos(x) on [0,2pi]",
                     mismatch(breakpoints(SignCarrier::cos_x(), 0, two_pi),
                              {pi / 2, 3 * pi / 2}),
                     1e-15));
  out.push_back(make(
      "zeros cos(x/2)+sin(x/2) on [0,2pi]",
      mismatch(breakpoints(SignCarrier::cos_half_plus_sin_half(), 0, two_pi),
               {3 * pi / 2}),
      1e-15));
  out.push_back(make(
      "zeros cos(x/2)-sin(x/2) on [0,2pi]",
      mismatch(breakpoints(SignCarrier::cos_half_minus_sin_half(), 0, two_pi),
               {pi / 2}),
      1e-15));
}

inline void forms_suite(std::vector<CheckResult>& out) {
  breakpoint_checks(out);
  derivative_checks(out);
  continuity_checks(out);
  agreement_checks(out);
  jump_checks(out);
}

inline void av_suite(std::vector<CheckResult>& out) {
  Sampler rng(kSeed + 1);
  for (const double alpha : {0.5, 1.0, 2.0, 3.0}) {
    const std::string tag = "alpha=" + std::to_string(alpha).substr(0, 3);
    double worst_sin = 0.0;
    double worst_cos = 0.0;
    for (int i = 0; i < 50; ++i) {
      double a = rng.uniform(-10.0, 10.0);
      double b = rng.uniform(-10.0, 10.0);
      if (a > b) std::swap(a, b);
      const double q_sin =
          quadrature::integrate_adaptive(
              [alpha](double x) { return std::abs(std::sin(alpha * x)); }, a, b,
              1e-11)
              .value;
      const double q_cos =
          quadrature::integrate_adaptive(
              [alpha](double x) { return std::abs(std::cos(alpha * x)); }, a, b,
              1e-11)
              .value;
      worst_sin = std::max(worst_sin, std::abs(integral_abs_sin(alpha, b) -
                                               integral_abs_sin(alpha, a) - q_sin));
      worst_cos = std::max(worst_cos, std::abs(integral_abs_cos(alpha, b) -
                                               integral_abs_cos(alpha, a) - q_cos));
    }
    out.push_back(make("|sin ax| vs oracle " + tag, worst_sin, 1e-8));
    out.push_back(make("|cos ax| vs oracle " + tag, worst_cos, 1e-8));

    double gap_sin = 0.0;
    double gap_cos = 0.0;
    for (int k = -8; k <= 8; ++k) {
      const double s = k * pi / alpha;
      const double c = (k + 0.5) * pi / alpha;
      gap_sin = std::max(gap_sin, std::abs(integral_abs_sin(alpha, s + 1e-9) -
                                           integral_abs_sin(alpha, s - 1e-9)));
      gap_cos = std::max(gap_cos, std::abs(integral_abs_cos(alpha, c + 1e-9) -
                                           integral_abs_cos(alpha, c - 1e-9)));
    }
    out.push_back(make("|sin ax| continuity " + tag, gap_sin, 1e-6));
    out.push_back(make("|cos ax| continuity " + tag, gap_cos, 1e-6));
  }
  out.push_back(make(
      "int_0^2pi |sin x| = 4",
      std::abs(integral_abs_sin(1.0, 2 * pi) - integral_abs_sin(1.0, 0) - 4.0),
      1e-10));
  out.push_back(make(
      "int_0^pi |cos x| = 2",
      std::abs(integral_abs_cos(1.0, pi) - integral_abs_cos(1.0, 0) - 2.0), 1e-10));
}

inline void cardioid_suite(std::vector<CheckResult>& out) {
  for (const IntegrandSpec spec : kAllSpecs) {
    for (const Method method : kAllMethods) {
      double worst = 0.0;
      for (const double a : {0.5, 1.0, 2.5}) {
        const Cardioid c(a, spec.family, spec.sign);
        worst = std::max(worst, std::abs(length(c, method) - 8.0 * a));
      }
      const double tol = method == Method::Oracle ? 1e-6 : 1e-12;
      out.push_back(make("length " + to_string(spec) + " " + to_string(method),
                         worst, tol));
    }
  }

  Sampler rng(kSeed + 2);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const IntegrandSpec spec = kAllSpecs[i % 4];
    const double a = rng.uniform(0.0, 10.0) + 1e-9;
    const double theta = rng.uniform(0.0, 2.0 * pi);
    const Cardioid c(a, spec.family, spec.sign);
    worst = std::max(worst, std::abs(arc_length_integrand(c, theta) -
                                     a * sqrt2 * eval_integrand(spec, theta)));
  }
  out.push_back(make("arc-length reduction", worst, 1e-12));

  constexpr int n = 1024;
  double rot = 0.0;
  const auto sine_plus = sample_curve(Cardioid(1.0, Family::Sine, Sign::Plus), n);
  const auto cos_plus = sample_curve(Cardioid(1.0, Family::Cosine, Sign::Plus), n);
  const auto cos_minus = sample_curve(Cardioid(1.0, Family::Cosine, Sign::Minus), n);
  for (int k = 0; k < n; ++k) {
    // Clockwise quarter turn (x, y) → (y, −x) lands on θ − π/2.
    const Point& cw = cos_plus[(k - n / 4 + n) % n];
    rot = std::max(rot, std::hypot(cw.x - sine_plus[k].y, cw.y + sine_plus[k].x));
    // Counterclockwise (x, y) → (−y, x) lands on θ + π/2.
    const Point& ccw = cos_minus[(k + n / 4) % n];
    rot = std::max(rot, std::hypot(ccw.x + sine_plus[k].y, ccw.y - sine_plus[k].x));
  }
  out.push_back(make("quarter-turn rotation", rot, 1e-12));
}

}  // namespace detail

inline std::vector<CheckResult> run_checks(Scope scope) {
  std::vector<CheckResult> out;
  if (scope == Scope::All || scope == Scope::Forms) detail::forms_suite(out);
  if (scope == Scope::All || scope == Scope::Av) detail::av_suite(out);
  if (scope == Scope::All || scope == Scope::Cardioid) detail::cardioid_suite(out);
  return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace radtrig::verify
