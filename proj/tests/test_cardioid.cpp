#include "radtrig/cardioid.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace radtrig;
using radtrig::testing::uniform;

TEST(Cardioid, RejectsNonPositiveScale) {
  EXPECT_THROW(Cardioid(0.0, Family::Sine, Sign::Plus), std::invalid_argument);
  EXPECT_THROW(Cardioid(-1.0, Family::Sine, Sign::Plus), std::invalid_argument);
  EXPECT_THROW(Cardioid(NAN, Family::Sine, Sign::Plus), std::invalid_argument);
}

TEST(Cardioid, ArcLengthIntegrandSpotValues) {
  EXPECT_NEAR(arc_length_integrand(Cardioid(1, Family::Sine, Sign::Plus), pi / 2), 2.0,
              1e-15);
  EXPECT_NEAR(arc_length_integrand(Cardioid(1, Family::Sine, Sign::Plus), 3 * pi / 2),
              0.0, 1e-15);
  EXPECT_NEAR(arc_length_integrand(Cardioid(2, Family::Cosine, Sign::Minus), pi), 4.0,
              1e-15);
}

TEST(Cardioid, RadiusNonNegative) {
  for (const IntegrandSpec spec : kAllSpecs) {
    const Cardioid c(1.7, spec.family, spec.sign);
    for (int i = 0; i < 1000; ++i) EXPECT_GE(c.radius(uniform(-10, 10)), 0.0);
  }
}

TEST(Cardioid, ReductionToTheRadicalIntegrand) {
  for (int i = 0; i < 10000; ++i) {
    const IntegrandSpec spec = kAllSpecs[i % 4];
    const double a = uniform(1e-6, 10.0);
    const double theta = uniform(-2 * pi, 4 * pi);
    const Cardioid c(a, spec.family, spec.sign);
    EXPECT_NEAR(arc_length_integrand(c, theta),
                a * std::sqrt(2.0) * eval_integrand(spec, theta), 1e-12)
        << to_string(c) << " theta=" << theta;
  }
}

TEST(Cardioid, ReductionHoldsRightAtTheCusp) {
  const Cardioid c(10.0, Family::Sine, Sign::Plus);
  for (double d : {1e-3, 1e-5, 1e-7, 1e-9}) {
    const double theta = 3 * pi / 2 + d;
    EXPECT_NEAR(arc_length_integrand(c, theta),
                10.0 * std::sqrt(2.0) * eval_integrand(c.spec(), theta), 1e-12);
  }
}

TEST(Cardioid, LengthIsEightA) {
  EXPECT_NEAR(length(Cardioid(1, Family::Sine, Sign::Plus), Method::GlobalForm), 8.0,
              1e-12);
  EXPECT_NEAR(length(Cardioid(2.5, Family::Cosine, Sign::Minus), Method::FloorForm),
              20.0, 1e-12);
  EXPECT_NEAR(length(Cardioid(1, Family::Sine, Sign::Minus), Method::SplitLocal), 8.0,
              1e-12);
  EXPECT_NEAR(length(Cardioid(3, Family::Sine, Sign::Minus), Method::Oracle), 24.0,
              1e-6);
}

TEST(Cardioid, MethodsAgreeAndScaleLinearly) {
  for (const IntegrandSpec spec : kAllSpecs) {
    const Cardioid unit(1.0, spec.family, spec.sign);
    for (double a : {0.25, 0.5, 1.0, 2.5, 7.0}) {
      const Cardioid c(a, spec.family, spec.sign);
      const double oracle = length(c, Method::Oracle);
      for (const Method m : {Method::GlobalForm, Method::SplitLocal, Method::FloorForm}) {
        EXPECT_NEAR(length(c, m), a * length(unit, m), 1e-12);
        EXPECT_NEAR(length(c, m), oracle, 1e-8);
      }
    }
  }
}

TEST(Cardioid, SplitRoutesCutAtTheZeros) {
  const Cardioid plus(1, Family::Sine, Sign::Plus);
  const Cardioid minus(1, Family::Sine, Sign::Minus);

  const auto rational = length_by_split(plus, Form::A_Rationalized);
  EXPECT_EQ(rational.splits, (std::vector<double>{pi / 2, 3 * pi / 2}));
  EXPECT_NEAR(rational.value, 8.0, 1e-12);

  for (const Form route : {Form::B_HalfAngle, Form::C1_ShiftForward,
                           Form::C2_ShiftBackward}) {
    const auto p = length_by_split(plus, route);
    EXPECT_EQ(p.splits, (std::vector<double>{3 * pi / 2})) << to_string(route);
    EXPECT_NEAR(p.value, 8.0, 1e-12);
    const auto m = length_by_split(minus, route);
    EXPECT_EQ(m.splits, (std::vector<double>{pi / 2})) << to_string(route);
    EXPECT_NEAR(m.value, 8.0, 1e-12);
  }
}

TEST(SampleCurve, QuarterTurns) {
  const auto pts = sample_curve(Cardioid(1, Family::Sine, Sign::Plus), 4);
  const Point want[] = {{1, 0}, {0, 2}, {-1, 0}, {0, 0}, {1, 0}};
  ASSERT_EQ(pts.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(pts[i].x, want[i].x, 1e-12) << i;
    EXPECT_NEAR(pts[i].y, want[i].y, 1e-12) << i;
  }
}

TEST(SampleCurve, ClosedAndBounded) {
  for (const IntegrandSpec spec : kAllSpecs) {
    const auto pts = sample_curve(Cardioid(1, spec.family, spec.sign), 4);
    EXPECT_NEAR(pts.front().x, pts.back().x, 1e-12);
    EXPECT_NEAR(pts.front().y, pts.back().y, 1e-12);
  }
  const auto cos_plus = sample_curve(Cardioid(1, Family::Cosine, Sign::Plus), 1000);
  double max_x = -INFINITY;
  for (const Point& p : cos_plus) max_x = std::max(max_x, p.x);
  EXPECT_NEAR(max_x, 2.0, 1e-15);
  EXPECT_NEAR(cos_plus.front().x, 2.0, 1e-15);
}

TEST(SampleCurve, RejectsTooFewSegments) {
  EXPECT_THROW(sample_curve(Cardioid(1, Family::Sine, Sign::Plus), 2),
               std::invalid_argument);
}

TEST(SampleCurve, CosineCardioidIsARotatedSineCardioid) {
  constexpr int n = 360;
  const auto s = sample_curve(Cardioid(1.5, Family::Sine, Sign::Plus), n);
  const auto cp = sample_curve(Cardioid(1.5, Family::Cosine, Sign::Plus), n);
  const auto cm = sample_curve(Cardioid(1.5, Family::Cosine, Sign::Minus), n);
  for (int k = 0; k < n; ++k) {
    const Point& cw = cp[(k - n / 4 + n) % n];
    EXPECT_NEAR(cw.x, s[k].y, 1e-12);
    EXPECT_NEAR(cw.y, -s[k].x, 1e-12);
    const Point& ccw = cm[(k + n / 4) % n];
    EXPECT_NEAR(ccw.x, -s[k].y, 1e-12);
    EXPECT_NEAR(ccw.y, s[k].x, 1e-12);
  }
}

TEST(SampleCurve, PolylineLengthApproachesEightAFromBelow) {
  const Cardioid c(2.0, Family::Cosine, Sign::Plus);
  const double coarse = polyline_length(sample_curve(c, 1000));
  const double fine = polyline_length(sample_curve(c, 1'000'000));
  EXPECT_LT(coarse, fine);
  EXPECT_LT(fine, 16.0);
  EXPECT_NEAR(fine, 16.0, 1e-9);
}
