#pragma once

// Radical trigonometric integrands, the sign function and the analytic zero
// lattices of every sign carrier that appears in the closed forms.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radtrig {

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt2 = std::numbers::sqrt2;
inline constexpr double quarter_pi = pi / 4.0;

enum class Family { Sine, Cosine };
enum class Sign { Plus, Minus };

/// Selects one of √(1 + sin x), √(1 − sin x), √(1 + cos x), √(1 − cos x).
struct IntegrandSpec {
  Family family = Family::Sine;
  Sign sign = Sign::Plus;

  friend bool operator==(const IntegrandSpec&, const IntegrandSpec&) = default;
};

inline constexpr IntegrandSpec kAllSpecs[] = {
    {Family::Sine, Sign::Plus},
    {Family::Sine, Sign::Minus},
    {Family::Cosine, Sign::Plus},
    {Family::Cosine, Sign::Minus},
};

inline double sign_factor(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

inline std::string to_string(const IntegrandSpec& spec) {
  std::string out = spec.sign == Sign::Plus ? "1+" : "1-";
  out += spec.family == Family::Sine ? "sin" : "cos";
  return out;
}

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": non-finite input");
  }
}

/// -1, 0 or +1.
inline int sgn(double x) {
  require_finite(x, "sgn");
  return (x > 0.0) - (x < 0.0);
}

namespace detail {

inline constexpr double kRadicandClamp = 1e-12;

/// Square root of a radicand that is non-negative in exact arithmetic.
inline double checked_sqrt(double radicand) {
  if (radicand < 0.0) {
    if (radicand < -kRadicandClamp) {
      throw std::logic_error("radicand " + std::to_string(radicand) +
                             " is negative beyond rounding");
    }
    return 0.0;
  }
  return std::sqrt(radicand);
}

}  // namespace detail

/// 1 ± sin x or 1 ± cos x, evaluated as a scaled square of a half-angle sine
/// so the value stays accurate next to the tangential zeros.
inline double radicand(IntegrandSpec spec, double x) {
  const double h = 0.5 * x;
  double s = 0.0;
  if (spec.family == Family::Sine) {
    // 1 ± sin x = 2 sin²(x/2 ± π/4)
    s = std::sin(h + sign_factor(spec.sign) * quarter_pi);
  } else {
    // 1 + cos x = 2 cos²(x/2), 1 − cos x = 2 sin²(x/2)
    s = spec.sign == Sign::Plus ? std::cos(h) : std::sin(h);
  }
  return 2.0 * s * s;
}

inline double eval_integrand(IntegrandSpec spec, double x) {
  require_finite(x, "eval_integrand");
  return detail::checked_sqrt(radicand(spec, x));
}

/// Zeros at (origin + k·period)·π/4 for every integer k.
struct ZeroLattice {
  int origin_quarters = 0;
  int period_quarters = 4;

  double origin() const { return origin_quarters * quarter_pi; }
  double period() const { return period_quarters * quarter_pi; }

  /// k-th zero. The product is a single rounding of an exact multiple of π/4.
  double point(double k) const {
    return (origin_quarters + k * period_quarters) * quarter_pi;
  }
};

namespace detail {

inline double snap_tolerance(double x) {
  return 1e-12 * std::max(1.0, std::abs(x));
}

}  // namespace detail

/// Index k with |x − point(k)| within the snap tolerance, if any.
inline std::optional<double> lattice_index_at(const ZeroLattice& lattice,
                                              double x) {
  const double k = std::round((x - lattice.origin()) / lattice.period());
  if (std::abs(x - lattice.point(k)) <= detail::snap_tolerance(x)) {
    return k;
  }
  return std::nullopt;
}

/// Index k of the lattice interval (point(k), point(k + 1)] holding x. A zero
/// belongs to the interval on its left.
inline double lattice_interval_index(const ZeroLattice& lattice, double x) {
  if (auto k = lattice_index_at(lattice, x)) {
    return *k - 1.0;
  }
  return std::floor((x - lattice.origin()) / lattice.period());
}

/// The argument of a sgn(·) factor in one of the closed forms.
struct SignCarrier {
  enum class Kind {
    CosX,
    SinX,
    CosHalfPlusSinHalf,
    CosHalfMinusSinHalf,
    SinHalf,
    CosHalf,
    SinHalfShift,  // sin(x/2 + offset)
    CosHalfShift,  // cos(x/2 + offset)
  };

  Kind kind = Kind::CosX;
  // Offset of the shifted kinds in units of π/4.
  int offset_quarters = 0;

  static SignCarrier cos_x() { return {Kind::CosX, 0}; }
  static SignCarrier sin_x() { return {Kind::SinX, 0}; }
  static SignCarrier cos_half_plus_sin_half() {
    return {Kind::CosHalfPlusSinHalf, 0};
  }
  static SignCarrier cos_half_minus_sin_half() {
    return {Kind::CosHalfMinusSinHalf, 0};
  }
  static SignCarrier sin_half() { return {Kind::SinHalf, 0}; }
  static SignCarrier cos_half() { return {Kind::CosHalf, 0}; }
  static SignCarrier sin_half_shift(int quarters) {
    return {Kind::SinHalfShift, quarters};
  }
  static SignCarrier cos_half_shift(int quarters) {
    return {Kind::CosHalfShift, quarters};
  }

  double offset() const { return offset_quarters * quarter_pi; }

  double operator()(double x) const {
    const double h = 0.5 * x;
    switch (kind) {
      case Kind::CosX: return std::cos(x);
      case Kind::SinX: return std::sin(x);
      case Kind::CosHalfPlusSinHalf: return std::cos(h) + std::sin(h);
      case Kind::CosHalfMinusSinHalf: return std::cos(h) - std::sin(h);
      case Kind::SinHalf: return std::sin(h);
      case Kind::CosHalf: return std::cos(h);
      case Kind::SinHalfShift: return std::sin(h + offset());
      case Kind::CosHalfShift: return std::cos(h + offset());
    }
    return 0.0;
  }

  double derivative(double x) const {
    const double h = 0.5 * x;
    switch (kind) {
      case Kind::CosX: return -std::sin(x);
      case Kind::SinX: return std::cos(x);
      case Kind::CosHalfPlusSinHalf: return 0.5 * (std::cos(h) - std::sin(h));
      case Kind::CosHalfMinusSinHalf: return -0.5 * (std::sin(h) + std::cos(h));
      case Kind::SinHalf: return 0.5 * std::cos(h);
      case Kind::CosHalf: return -0.5 * std::sin(h);
      case Kind::SinHalfShift: return 0.5 * std::cos(h + offset());
      case Kind::CosHalfShift: return -0.5 * std::sin(h + offset());
    }
    return 0.0;
  }

  /// Closed-form zero set. Half-angle combinations are rewritten as a single
  /// shifted cosine, e.g. cos(x/2) + sin(x/2) = √2 cos(x/2 − π/4).
  ZeroLattice zeros() const {
    switch (kind) {
      case Kind::CosX: return {2, 4};
      case Kind::SinX: return {0, 4};
      case Kind::CosHalfPlusSinHalf: return {6, 8};
      case Kind::CosHalfMinusSinHalf: return {2, 8};
      case Kind::SinHalf: return {0, 8};
      case Kind::CosHalf: return {4, 8};
      // x/2 + o = kπ
      case Kind::SinHalfShift: return {-2 * offset_quarters, 8};
      // x/2 + o = π/2 + kπ
      case Kind::CosHalfShift: return {4 - 2 * offset_quarters, 8};
    }
    return {};
  }

  friend bool operator==(const SignCarrier&, const SignCarrier&) = default;
};

inline std::string to_string(const SignCarrier& c) {
  using K = SignCarrier::Kind;
  switch (c.kind) {
    case K::CosX: return "cos(x)";
    case K::SinX: return "sin(x)";
    case K::CosHalfPlusSinHalf: return "cos(x/2)+sin(x/2)";
    case K::CosHalfMinusSinHalf: return "cos(x/2)-sin(x/2)";
    case K::SinHalf: return "sin(x/2)";
    case K::CosHalf: return "cos(x/2)";
    case K::SinHalfShift:
      return "sin(x/2" + std::string(c.offset_quarters < 0 ? "-" : "+") +
             std::to_string(std::abs(c.offset_quarters)) + "pi/4)";
    case K::CosHalfShift:
      return "cos(x/2" + std::string(c.offset_quarters < 0 ? "-" : "+") +
             std::to_string(std::abs(c.offset_quarters)) + "pi/4)";
  }
  return {};
}

inline constexpr double kMaxBreakpointSpan = 1e6;

/// Zeros of the carrier strictly inside (a, b), in increasing order. Zeros
/// that coincide with an endpoint are boundaries, not splits.
inline std::vector<double> breakpoints(const SignCarrier& carrier, double a,
                                       double b) {
  require_finite(a, "breakpoints");
  require_finite(b, "breakpoints");
  if (a > b) {
    throw std::invalid_argument("breakpoints: reversed interval");
  }
  if (b - a > kMaxBreakpointSpan) {
    throw std::invalid_argument("breakpoints: interval wider than 1e6");
  }
  const ZeroLattice lattice = carrier.zeros();
  std::vector<double> out;
  double k = std::ceil((a - lattice.origin()) / lattice.period()) - 1.0;
  for (;; k += 1.0) {
    const double z = lattice.point(k);
    if (z >= b || std::abs(z - b) <= detail::snap_tolerance(b)) break;
    if (z <= a || std::abs(z - a) <= detail::snap_tolerance(a)) continue;
    out.push_back(z);
  }
  return out;
}

}  // namespace radtrig
