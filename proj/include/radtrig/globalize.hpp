#pragma once

// Continuous antiderivatives built from the sign-based local forms, and
// definite integrals by four independent routes.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "radtrig/antiderivatives.hpp"
#include "radtrig/quadrature.hpp"
#include "radtrig/trig_kernel.hpp"

namespace radtrig {

inline constexpr double kJumpProbe = 1e-7;
inline constexpr double kJumpCrossCheck = 1e-6;

/// Size of the step a local form takes across the carrier zero b, right limit
/// minus left limit. The sign factor flips there while the continuous factor
/// does not, so the step is ±2·g(b).
inline double jump_at(const ClosedForm& cf, double b) {
  require_finite(b, "jump_at");
  if (!cf.is_local()) {
    throw std::invalid_argument("jump_at: " + to_string(cf) +
                                " is not a local form");
  }
  const SignCarrier carrier = sign_carrier(cf);
  const ZeroLattice lattice = carrier.zeros();
  const auto k = lattice_index_at(lattice, b);
  if (!k) {
    throw std::invalid_argument("jump_at: " + std::to_string(b) +
                                " is not a zero of " + to_string(carrier));
  }
  const double zero = lattice.point(*k);
  const double analytic =
      2.0 * sgn(carrier.derivative(zero)) * continuous_factor(cf, zero);

  const double numeric = eval_local_form(cf, zero + kJumpProbe) -
                         eval_local_form(cf, zero - kJumpProbe);
  if (std::abs(numeric - analytic) > kJumpCrossCheck) {
    throw std::logic_error("jump_at: analytic jump " + std::to_string(analytic) +
                           " disagrees with numeric " + std::to_string(numeric));
  }
  return analytic;
}

/// A local form plus a piecewise-constant correction per lattice interval,
/// continuous everywhere and equal to the local form on the interval holding
/// the base point.
///
/// The jump pattern repeats every 2π, which spans one or two lattice periods,
/// so the jumps of a single 2π window are tabulated on construction and every
/// correction is a closed-form sum over them.
class PiecewiseAntiderivative {
 public:
  static constexpr double kBaseClearance = 1e-9;

  PiecewiseAntiderivative(const ClosedForm& local, double base)
      : local_(local), base_(base) {
    require_finite(base, "globalize");
    if (!local.is_local()) {
      throw std::invalid_argument("globalize: " + to_string(local) +
                                  " is not a local form");
    }
    lattice_ = sign_carrier(local).zeros();
    const double nearest =
        lattice_.point(std::round((base - lattice_.origin()) / lattice_.period()));
    if (std::abs(base - nearest) <= kBaseClearance) {
      throw std::invalid_argument("globalize: base point on a breakpoint");
    }
    per_window_ = 8 / lattice_.period_quarters;
    for (int j = 0; j < per_window_; ++j) {
      jumps_[j] = jump_at(local_, lattice_.point(j));
      window_sum_ += jumps_[j];
    }
    base_index_ = lattice_interval_index(lattice_, base);
  }

  const ClosedForm& local_form() const { return local_; }
  double base_point() const { return base_; }
  const ZeroLattice& lattice() const { return lattice_; }

  /// Interval k runs from lattice zero k (exclusive) to zero k + 1 (inclusive).
  double interval_index(double x) const {
    return lattice_interval_index(lattice_, x);
  }

  /// Constant added to the local form on interval k.
  double correction(double k) const {
    return -(jumps_through(k) - jumps_through(base_index_));
  }

  double operator()(double x) const {
    require_finite(x, "PiecewiseAntiderivative");
    return eval_local_form(local_, x) + correction(interval_index(x));
  }

 private:
  // Sum of the jumps at zeros 1..n, extended additively to n ≤ 0.
  double jumps_through(double n) const {
    const double windows = std::floor(n / per_window_);
    const int rest = static_cast<int>(n - windows * per_window_);
    double sum = windows * window_sum_;
    for (int i = 1; i <= rest; ++i) {
      sum += jumps_[i % per_window_];
    }
    return sum;
  }

  ClosedForm local_;
  double base_ = 0.0;
  ZeroLattice lattice_;
  int per_window_ = 1;
  std::array<double, 2> jumps_{};
  double window_sum_ = 0.0;
  double base_index_ = 0.0;
};

inline PiecewiseAntiderivative globalize(const ClosedForm& local, double base) {
  return PiecewiseAntiderivative(local, base);
}

/// Midpoint of the lattice interval right after the lattice origin.
inline double default_base(const ClosedForm& local) {
  const ZeroLattice lattice = sign_carrier(local).zeros();
  return lattice.origin() + 0.5 * lattice.period();
}

// ---------------------------------------------------------------------------
// Definite integrals
// ---------------------------------------------------------------------------

enum class Method { GlobalForm, SplitLocal, FloorForm, Oracle };

inline constexpr Method kAllMethods[] = {Method::GlobalForm, Method::SplitLocal,
                                         Method::FloorForm, Method::Oracle};

inline std::string to_string(Method m) {
  switch (m) {
    case Method::GlobalForm: return "global";
    case Method::SplitLocal: return "split";
    case Method::FloorForm: return "floor";
    case Method::Oracle: return "oracle";
  }
  return {};
}

inline constexpr double kOracleTolerance = 1e-11;

struct SplitIntegral {
  double value = 0.0;
  std::vector<double> splits;
};

/// ∫ₐᵇ by zero-splitting: cut [a, b] at the carrier's zeros, fix the sign of
/// the carrier on each piece and sum the differences of the continuous factor.
inline SplitIntegral split_integral(const ClosedForm& local, double a, double b) {
  require_finite(a, "split_integral");
  require_finite(b, "split_integral");
  if (!local.is_local()) {
    throw std::invalid_argument("split_integral: " + to_string(local) +
                                " is not a local form");
  }
  if (a > b) {
    SplitIntegral r = split_integral(local, b, a);
    r.value = -r.value;
    return r;
  }
  SplitIntegral out;
  if (a == b) return out;
  const SignCarrier carrier = sign_carrier(local);
  out.splits = breakpoints(carrier, a, b);

  double left = a;
  for (std::size_t i = 0; i <= out.splits.size(); ++i) {
    const double right = i < out.splits.size() ? out.splits[i] : b;
    const int s = sgn(carrier(0.5 * (left + right)));
    out.value += s * (continuous_factor(local, right) -
                      continuous_factor(local, left));
    left = right;
  }
  return out;
}

/// ∫ₐᵇ √(1 ± trig x) dx, with ∫ₐᵇ = −∫ᵇₐ.
///   GlobalForm: half-angle form made continuous by jump corrections.
///   SplitLocal: rationalized form, split at the zeros of its carrier.
///   FloorForm:  floor-function global form.
///   Oracle:     adaptive quadrature of the integrand.
inline double definite_integral(IntegrandSpec spec, double a, double b,
                                Method method) {
  require_finite(a, "definite_integral");
  require_finite(b, "definite_integral");
  if (a == b) return 0.0;
  switch (method) {
    case Method::GlobalForm: {
      const ClosedForm local{spec, Form::B_HalfAngle};
      const PiecewiseAntiderivative global(local, default_base(local));
      return global(b) - global(a);
    }
    case Method::SplitLocal:
      return split_integral({spec, Form::A_Rationalized}, a, b).value;
    case Method::FloorForm: {
      const ClosedForm floor_form{spec, Form::G_FloorShiftForward};
      return eval_global_floor_form(floor_form, b) -
             eval_global_floor_form(floor_form, a);
    }
    case Method::Oracle:
      return quadrature::integrate_adaptive(
                 [spec](double x) { return eval_integrand(spec, x); }, a, b,
                 kOracleTolerance)
          .value;
  }
  return 0.0;
}

}  // namespace radtrig
