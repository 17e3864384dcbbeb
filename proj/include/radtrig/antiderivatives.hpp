#pragma once

// Closed-form antiderivatives of √(1 ± sin x) and √(1 ± cos x), and the
// absolute-value integration rules they are built from.
//
// Every local form has the shape sgn(carrier(x))·g(x) with g continuous, so it
// is an antiderivative on each open interval between zeros of the carrier and
// may jump across them. The floor/ceiling forms are continuous on all of ℝ.
// Integration constants are zero throughout.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "radtrig/trig_kernel.hpp"

namespace radtrig {

enum class Form {
  A_Rationalized,        // rationalized numerator
  B_HalfAngle,           // double-angle / tan(x/2) identities
  C1_ShiftForward,       // x = y − π/2
  C2_ShiftBackward,      // x = π/2 − y
  G_FloorShiftForward,   // floor form through x = y − π/2
  G_FloorShiftBackward,  // ceiling form through x = π/2 − y
};

inline constexpr Form kLocalForms[] = {Form::A_Rationalized, Form::B_HalfAngle,
                                       Form::C1_ShiftForward,
                                       Form::C2_ShiftBackward};
inline constexpr Form kGlobalForms[] = {Form::G_FloorShiftForward,
                                        Form::G_FloorShiftBackward};
inline constexpr Form kAllForms[] = {
    Form::A_Rationalized,      Form::B_HalfAngle,
    Form::C1_ShiftForward,     Form::C2_ShiftBackward,
    Form::G_FloorShiftForward, Form::G_FloorShiftBackward};

inline bool is_local(Form f) {
  return f != Form::G_FloorShiftForward && f != Form::G_FloorShiftBackward;
}

inline std::string to_string(Form f) {
  switch (f) {
    case Form::A_Rationalized: return "A";
    case Form::B_HalfAngle: return "B";
    case Form::C1_ShiftForward: return "C1";
    case Form::C2_ShiftBackward: return "C2";
    case Form::G_FloorShiftForward: return "floor";
    case Form::G_FloorShiftBackward: return "ceil";
  }
  return {};
}

struct ClosedForm {
  IntegrandSpec spec;
  Form form = Form::A_Rationalized;

  bool is_local() const { return radtrig::is_local(form); }

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

inline std::string to_string(const ClosedForm& cf) {
  return to_string(cf.form) + "[" + to_string(cf.spec) + "]";
}

namespace detail {

inline bool is_plus(const IntegrandSpec& s) { return s.sign == Sign::Plus; }
inline bool is_sine(const IntegrandSpec& s) { return s.family == Family::Sine; }

// Offsets, in quarters of π, of the shifted half-angle carriers. The cosine
// entries are the sine entries moved by x → x + π/2.
inline int shift_forward_quarters(const IntegrandSpec& s) {
  if (is_sine(s)) return is_plus(s) ? 1 : -1;
  return is_plus(s) ? 2 : 0;
}

inline int shift_backward_quarters(const IntegrandSpec& s) {
  if (is_sine(s)) return is_plus(s) ? -1 : 1;
  return is_plus(s) ? 0 : 2;
}

inline void require_local(const ClosedForm& cf) {
  if (!cf.is_local()) {
    throw std::invalid_argument(to_string(cf) + " is not a local form");
  }
}

}  // namespace detail

/// Carrier whose sign selects the branch of a local form. For the floor and
/// ceiling forms this is the carrier of the matching shift form, whose zeros
/// are exactly where the floor/ceiling argument crosses an integer.
inline SignCarrier sign_carrier(const ClosedForm& cf) {
  const IntegrandSpec& s = cf.spec;
  switch (cf.form) {
    case Form::A_Rationalized:
      return detail::is_sine(s) ? SignCarrier::cos_x() : SignCarrier::sin_x();
    case Form::B_HalfAngle:
      if (detail::is_sine(s)) {
        return detail::is_plus(s) ? SignCarrier::cos_half_plus_sin_half()
                                  : SignCarrier::cos_half_minus_sin_half();
      }
      return detail::is_plus(s) ? SignCarrier::cos_half()
                                : SignCarrier::sin_half();
    case Form::C1_ShiftForward:
    case Form::G_FloorShiftForward:
      return SignCarrier::sin_half_shift(detail::shift_forward_quarters(s));
    case Form::C2_ShiftBackward:
    case Form::G_FloorShiftBackward:
      return SignCarrier::cos_half_shift(detail::shift_backward_quarters(s));
  }
  return {};
}

/// The continuous factor g of a local form sgn(carrier)·g.
inline double continuous_factor(const ClosedForm& cf, double x) {
  detail::require_local(cf);
  const IntegrandSpec& s = cf.spec;
  const double h = 0.5 * x;
  switch (cf.form) {
    case Form::A_Rationalized: {
      // √(1 ∓ sin x) is the radicand of the opposite sign.
      const IntegrandSpec conjugate{
          s.family, detail::is_plus(s) ? Sign::Minus : Sign::Plus};
      const double root = detail::checked_sqrt(radicand(conjugate, x));
      // sine: ∓2√(1 ∓ sin x); cosine: ±2√(1 ∓ cos x)
      const double lead = detail::is_sine(s) == detail::is_plus(s) ? -2.0 : 2.0;
      return lead * root;
    }
    case Form::B_HalfAngle:
      if (detail::is_sine(s)) {
        return detail::is_plus(s) ? 2.0 * (std::sin(h) - std::cos(h))
                                  : 2.0 * (std::sin(h) + std::cos(h));
      }
      return detail::is_plus(s) ? 2.0 * sqrt2 * std::sin(h)
                                : -2.0 * sqrt2 * std::cos(h);
    case Form::C1_ShiftForward:
      return -2.0 * sqrt2 *
             std::cos(h + detail::shift_forward_quarters(s) * quarter_pi);
    case Form::C2_ShiftBackward:
      return 2.0 * sqrt2 *
             std::sin(h + detail::shift_backward_quarters(s) * quarter_pi);
    default:
      break;
  }
  return 0.0;
}

enum class Side { Left, Right };

/// Sign of the carrier at x. On a carrier zero the one-sided limit is used.
inline int carrier_sign(const SignCarrier& carrier, double x,
                        Side side = Side::Left) {
  const ZeroLattice lattice = carrier.zeros();
  if (auto k = lattice_index_at(lattice, x)) {
    const int rising = sgn(carrier.derivative(lattice.point(*k)));
    return side == Side::Right ? rising : -rising;
  }
  return sgn(carrier(x));
}

/// Local form with C = 0. On a carrier zero the value is the limit from the
/// given side (left by default).
inline double eval_local_form(const ClosedForm& cf, double x,
                              Side side = Side::Left) {
  require_finite(x, "eval_local_form");
  detail::require_local(cf);
  return carrier_sign(sign_carrier(cf), x, side) * continuous_factor(cf, x);
}

/// Floor (forward shift) or ceiling (backward shift) global antiderivative
/// with C = 0.
inline double eval_global_floor_form(const ClosedForm& cf, double x) {
  require_finite(x, "eval_global_floor_form");
  if (cf.is_local()) {
    throw std::invalid_argument(to_string(cf) + " is not a floor form");
  }
  const IntegrandSpec& s = cf.spec;
  const double h = 0.5 * x;
  const double turns = x / (2.0 * pi);
  const double c = 2.0 * sqrt2;

  if (cf.form == Form::G_FloorShiftForward) {
    if (detail::is_sine(s)) {
      if (detail::is_plus(s)) {
        const double k = std::floor(turns + 0.25);
        return 2.0 * c * k - c * std::cos(h + quarter_pi - k * pi);
      }
      const double k = std::floor(turns + 0.75);
      return 2.0 * c * k + c * std::sin(h + quarter_pi - k * pi);
    }
    // √(1 + cos x) = √2|cos(x/2)|, √(1 − cos x) = √2|sin(x/2)|, integrated
    // with the |cos αx| and |sin αx| rules at α = 1/2.
    if (detail::is_plus(s)) {
      const double k = std::floor(turns + 0.5);
      return 2.0 * c * k + c * std::sin(h - k * pi);
    }
    const double k = std::floor(turns);
    return 2.0 * c * k - c * std::cos(h - k * pi);
  }

  // Backward shift. ⌊t⌋ + ⌈−t⌉ = 0 turns the floor of the reflected variable
  // into a ceiling of x.
  if (detail::is_sine(s)) {
    if (detail::is_plus(s)) {
      const double k = std::ceil(turns - 0.75);
      return 2.0 * c * k + c * std::sin(h - quarter_pi - k * pi);
    }
    const double k = std::ceil(turns - 0.25);
    return 2.0 * c * k + c * std::cos(h - quarter_pi - k * pi);
  }
  // Sine forms at x + π/2.
  if (detail::is_plus(s)) {
    const double k = std::ceil(turns - 0.5);
    return 2.0 * c * k + c * std::sin(h - k * pi);
  }
  const double k = std::ceil(turns);
  return 2.0 * c * k + c * std::cos(h - k * pi);
}

/// Any closed form, local or global.
inline double eval_closed_form(const ClosedForm& cf, double x) {
  return cf.is_local() ? eval_local_form(cf, x) : eval_global_floor_form(cf, x);
}

// ---------------------------------------------------------------------------
// Absolute-value integration rules
// ---------------------------------------------------------------------------

/// A function f with an antiderivative F and a carrier locating f's roots.
struct AbsFunctionDescriptor {
  std::function<double(double)> f;
  std::function<double(double)> F;
  SignCarrier carrier;
};

namespace detail {

inline double central_difference(const std::function<double(double)>& fn,
                                 double x, double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

}  // namespace detail

/// ∫|f|/√F dx as ±2·sgn(f)·√F. The printed rule −2 sgn(f)√F holds when the
/// radicand decreases where f is positive (F′ = −f); the overall sign is
/// chosen by differentiating F numerically next to x.
inline double abs_over_sqrt_antiderivative(const AbsFunctionDescriptor& d,
                                           double x) {
  require_finite(x, "abs_over_sqrt_antiderivative");
  const double radicand_value = d.F(x);
  if (!(radicand_value > 0.0)) {
    throw std::domain_error("abs_over_sqrt_antiderivative: F(x) <= 0");
  }
  constexpr double kStep = 1e-6;
  // Orientation of F′ relative to f; probe slightly off x when f(x) = 0.
  double probe = x;
  double alignment = 0.0;
  for (double offset : {0.0, 1e-3, -1e-3, 1e-2, -1e-2}) {
    probe = x + offset;
    alignment = d.f(probe) * detail::central_difference(d.F, probe, kStep);
    if (alignment != 0.0) break;
  }
  const double lead = alignment > 0.0 ? 2.0 : -2.0;
  return lead * sgn(d.f(x)) * std::sqrt(radicand_value);
}

struct AbsAntiderivativeValue {
  double value = 0.0;
  /// False when F does not vanish at the nearest root of f; the value is then
  /// only an antiderivative between consecutive roots.
  bool conforming = true;
};

/// ∫|f| dx = sgn(f)·F when F vanishes at every root of f.
inline AbsAntiderivativeValue abs_antiderivative(const AbsFunctionDescriptor& d,
                                                 double x) {
  require_finite(x, "abs_antiderivative");
  const ZeroLattice lattice = d.carrier.zeros();
  const double k = std::round((x - lattice.origin()) / lattice.period());
  const double root = lattice.point(k);
  AbsAntiderivativeValue out;
  out.value = sgn(d.f(x)) * d.F(x);
  out.conforming = std::abs(d.F(root)) <= 1e-9;
  return out;
}

namespace detail {

inline void require_alpha(double alpha) {
  require_finite(alpha, "alpha");
  if (alpha == 0.0) {
    throw std::invalid_argument("alpha must be nonzero");
  }
}

}  // namespace detail

/// Continuous antiderivative of |sin αx|.
inline double integral_abs_sin(double alpha, double x) {
  detail::require_alpha(alpha);
  require_finite(x, "integral_abs_sin");
  const double k = std::floor(alpha * x / pi);
  return (2.0 / alpha) * k - (1.0 / alpha) * std::cos(alpha * x - k * pi);
}

/// Continuous antiderivative of |cos αx|.
inline double integral_abs_cos(double alpha, double x) {
  detail::require_alpha(alpha);
  require_finite(x, "integral_abs_cos");
  const double k = std::floor(alpha * x / pi + 0.5);
  return (2.0 / alpha) * k + (1.0 / alpha) * std::sin(alpha * x - k * pi);
}

}  // namespace radtrig
