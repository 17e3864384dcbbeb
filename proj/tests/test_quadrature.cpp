#include "radtrig/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>
#include <numbers>

#include "test_support.hpp"

using radtrig::quadrature::integrate_adaptive;
using radtrig::testing::uniform;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Quadrature, Polynomial) {
  const auto r = integrate_adaptive([](double x) { return x * x; }, 0, 1, 1e-12);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(r.subdivisions, 1u);
  EXPECT_LE(r.error_estimate, 1e-12);
}

TEST(Quadrature, Sine) {
  const auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0, kPi, 1e-12);
  EXPECT_NEAR(r.value, 2.0, 1e-14);
}

TEST(Quadrature, CardioidIntegrandWithoutHints) {
  const auto f = [](double t) { return std::sqrt(1 + std::sin(t)); };
  const auto r = integrate_adaptive(f, 0, 2 * kPi, 1e-12);
  EXPECT_NEAR(r.value, 4 * std::sqrt(2.0), 1e-8);
  // Off-grid limits keep the kink away from the bisection points.
  const auto s = integrate_adaptive(f, 0.123, 0.123 + 2 * kPi, 1e-12);
  EXPECT_NEAR(s.value, 4 * std::sqrt(2.0), 1e-8);
  EXPECT_GT(s.subdivisions, 3u);
}

// A kink a hair away from a segment end, where an open rule has no node.
TEST(Quadrature, KinkNextToSegmentEnd) {
  for (const double c : {0.002, 0.5 + 1e-4, 1 - 3e-3, 0.25 - 7e-4}) {
    const auto f = [c](double x) { return std::abs(x - c); };
    const double want = 0.5 * (c * c + (1 - c) * (1 - c));
    const auto r = integrate_adaptive(f, 0, 1, 1e-12);
    EXPECT_NEAR(r.value, want, 1e-12) << c;
  }
}

TEST(Quadrature, AbsoluteValueKink) {
  const auto r =
      integrate_adaptive([](double x) { return std::abs(x - 0.3183); }, -1, 1, 1e-12);
  const double want = 0.5 * (1.3183 * 1.3183 + 0.6817 * 0.6817);
  EXPECT_NEAR(r.value, want, 1e-11);
}

TEST(Quadrature, ReversedAndEmpty) {
  const auto f = [](double x) { return std::exp(x); };
  EXPECT_NEAR(integrate_adaptive(f, 1, 0, 1e-12).value, -(std::exp(1.0) - 1), 1e-14);
  EXPECT_EQ(integrate_adaptive(f, 2, 2, 1e-12).value, 0.0);
}

TEST(Quadrature, Errors) {
  const auto f = [](double x) { return x; };
  EXPECT_THROW(integrate_adaptive(f, 0, 1, 1e-13), std::invalid_argument);
  EXPECT_THROW(integrate_adaptive(f, 0, INFINITY, 1e-6), std::domain_error);
  EXPECT_THROW(integrate_adaptive([](double) { return NAN; }, 0, 1, 1e-6),
               std::domain_error);
  // Ten million unit steps cannot all be resolved within the subdivision cap.
  EXPECT_THROW(integrate_adaptive([](double x) { return std::floor(1e7 * x); }, 0, 1,
                                  1e-12),
               std::runtime_error);
}

TEST(Quadrature, Linearity) {
  for (int i = 0; i < 50; ++i) {
    const double p = uniform(-3, 3), q = uniform(-3, 3), w = uniform(0.5, 4);
    const double alpha = uniform(-2, 2), beta = uniform(-2, 2);
    const auto f = [p](double x) { return std::sin(p * x) + x * x; };
    const auto g = [q, w](double x) { return std::exp(-q * q * x * x) * std::cos(w * x); };
    const double tol = 1e-11;
    const double a = uniform(-5, 0), b = uniform(0, 5);
    const double lhs =
        integrate_adaptive([&](double x) { return alpha * f(x) + beta * g(x); }, a, b, tol)
            .value;
    const double rhs = alpha * integrate_adaptive(f, a, b, tol).value +
                       beta * integrate_adaptive(g, a, b, tol).value;
    EXPECT_NEAR(lhs, rhs, 10 * tol * (1 + std::abs(alpha) + std::abs(beta)));
  }
}

TEST(Quadrature, IntervalAdditivity) {
  const auto f = [](double x) { return std::sqrt(1 + std::cos(x)); };
  const double tol = 1e-11;
  for (int i = 0; i < 50; ++i) {
    double a = uniform(-10, 10), b = uniform(-10, 10), c = uniform(-10, 10);
    const double whole = integrate_adaptive(f, a, c, tol).value;
    const double parts =
        integrate_adaptive(f, a, b, tol).value + integrate_adaptive(f, b, c, tol).value;
    EXPECT_NEAR(whole, parts, 10 * tol);
  }
}

TEST(Quadrature, ErrorTracksTolerance) {
  const auto f = [](double t) { return std::sqrt(1 + std::sin(t)); };
  const double exact = 4 * std::sqrt(2.0);  // one full period
  for (double tol = 1e-3; tol >= 1e-12; tol /= 2) {
    const auto r = integrate_adaptive(f, 0.5, 0.5 + 2 * kPi, tol);
    EXPECT_LE(std::abs(r.value - exact), tol) << tol;
    EXPECT_LE(r.error_estimate, tol);
  }
}
