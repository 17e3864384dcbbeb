#pragma once

// Cardioids r = a(1 ± sin θ) and r = a(1 ± cos θ): arc length through the
// radical integrals, and Cartesian samples for plotting.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "radtrig/antiderivatives.hpp"
#include "radtrig/globalize.hpp"
#include "radtrig/quadrature.hpp"
#include "radtrig/trig_kernel.hpp"

namespace radtrig {

class Cardioid {
 public:
  Cardioid(double a, Family trig, Sign sign) : a_(a), trig_(trig), sign_(sign) {
    if (!std::isfinite(a) || !(a > 0.0)) {
      throw std::invalid_argument("cardioid scale must be positive and finite");
    }
  }

  double a() const { return a_; }
  Family trig() const { return trig_; }
  Sign sign() const { return sign_; }
  IntegrandSpec spec() const { return {trig_, sign_}; }

  double radius(double theta) const {
    const double t = trig_ == Family::Sine ? std::sin(theta) : std::cos(theta);
    return a_ * (1.0 + sign_factor(sign_) * t);
  }

  /// dr/dθ
  double radius_derivative(double theta) const {
    const double dt =
        trig_ == Family::Sine ? std::cos(theta) : -std::sin(theta);
    return a_ * sign_factor(sign_) * dt;
  }

 private:
  double a_;
  Family trig_;
  Sign sign_;
};

inline std::string to_string(const Cardioid& c) {
  return "r=" + std::to_string(c.a()) + "(" + to_string(c.spec()) + ")";
}

/// √(r² + r′²), computed from the curve itself.
inline double arc_length_integrand(const Cardioid& c, double theta) {
  require_finite(theta, "arc_length_integrand");
  return std::hypot(c.radius(theta), c.radius_derivative(theta));
}

inline constexpr double kCardioidOracleTolerance = 1e-10;

/// Total arc length. The closed-form routes use L = a√2 ∫₀^{2π} √(1 ± trig θ)
/// dθ; the oracle integrates √(r² + r′²) directly.
inline double length(const Cardioid& c, Method method) {
  if (method == Method::Oracle) {
    return quadrature::integrate_adaptive(
               [&c](double t) { return arc_length_integrand(c, t); }, 0.0,
               2.0 * pi, kCardioidOracleTolerance)
        .value;
  }
  return c.a() * sqrt2 * definite_integral(c.spec(), 0.0, 2.0 * pi, method);
}

/// Length by zero-splitting along one local form; splits lists the cut points.
inline SplitIntegral length_by_split(const Cardioid& c, Form route) {
  SplitIntegral r = split_integral({c.spec(), route}, 0.0, 2.0 * pi);
  r.value *= c.a() * sqrt2;
  return r;
}

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// n + 1 points at θ = 2πk/n, k = 0..n; the last closes the curve.
inline std::vector<Point> sample_curve(const Cardioid& c, int n) {
  if (n < 3) {
    throw std::invalid_argument("sample_curve: need at least 3 segments");
  }
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double theta = 2.0 * pi * k / n;
    const double r = c.radius(theta);
    points.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return points;
}

inline double polyline_length(const std::vector<Point>& points) {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    total += std::hypot(points[i].x - points[i - 1].x,
                        points[i].y - points[i - 1].y);
  }
  return total;
}

}  // namespace radtrig
