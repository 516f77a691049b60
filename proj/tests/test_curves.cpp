#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lgeom/bertrand.hpp"
#include "lgeom/curves.hpp"
#include "lgeom/numerics.hpp"
#include "lgeom/registry.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace lgeom;
using lgeom::testing::expect_kind;

namespace {

ParamCurve polynomial_curve(LVec3 c1, LVec3 c2) {
  // t c1 + t^2 c2 on [-1, 1].
  return ParamCurve::analytic({-1.0, 1.0}, [c1, c2](double t, int order) {
    Jet j;
    j.d[0] = t * c1 + t * t * c2;
    if (order >= 1) j.d[1] = c1 + 2.0 * t * c2;
    if (order >= 2) j.d[2] = 2.0 * c2;
    return j;
  });
}

// Central difference of the frame with respect to arc length.
std::array<LVec3, 3> frame_rates_fd(const ParamCurve& c, double t, double h) {
  const FrenetData p = frenet_apparatus(c, t + h);
  const FrenetData m = frenet_apparatus(c, t - h);
  const double ds = arc_length(c, t - h, t + h);
  return {(p.T - m.T) / ds, (p.N - m.N) / ds, (p.B - m.B) / ds};
}

void expect_rates_match(const ParamCurve& c, double t, FrenetCase expected) {
  const FrenetData fd = frenet_apparatus(c, t);
  EXPECT_EQ(fd.kind, expected);
  const auto pred = frenet_rates(fd);
  const auto fd_rates = frame_rates_fd(c, t, 1e-4);
  for (int i = 0; i < 3; ++i) EXPECT_LT(max_abs_diff(pred[i], fd_rates[i]), 1e-6) << i;
}

}  // namespace

TEST(Frenet, TimelikeHelixCurvatureAndTorsion) {
  const ParamCurve helix = timelike_helix();
  for (double t : {-3.0, 0.0, 0.7, 5.0}) {
    const FrenetData fd = frenet_apparatus(helix, t);
    EXPECT_EQ(fd.kind, FrenetCase::TimelikeCurve);
    EXPECT_NEAR(fd.kappa, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(fd.tau, 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(fd.speed, std::sqrt(3.0), 1e-12);
  }
}

TEST(Frenet, FrameIsPseudoOrthonormal) {
  const FrenetData fd = frenet_apparatus(timelike_helix(), 1.1);
  EXPECT_NEAR(minkowski_inner(fd.T, fd.T), -1.0, 1e-12);
  EXPECT_NEAR(minkowski_inner(fd.N, fd.N), 1.0, 1e-12);
  EXPECT_NEAR(minkowski_inner(fd.B, fd.B), 1.0, 1e-12);
  EXPECT_NEAR(minkowski_inner(fd.T, fd.N), 0.0, 1e-12);
  EXPECT_NEAR(minkowski_inner(fd.N, fd.B), 0.0, 1e-12);
}

TEST(Frenet, RatesTimelikeCurve) {
  expect_rates_match(timelike_helix(), 0.4, FrenetCase::TimelikeCurve);
}

TEST(Frenet, RatesSpacelikeNormal) {
  expect_rates_match(twisted_cubic(), 0.5, FrenetCase::SpacelikeSpacelikeNormal);
}

TEST(Frenet, RatesTimelikeNormal) {
  const ParamCurve g =
      bertrand_curve(SlopeParams::from_angle(std::numbers::pi / 3, 1.5), warped(2.0));
  expect_rates_match(g, 0.2, FrenetCase::SpacelikeTimelikeNormal);
}

TEST(Frenet, DegenerateCurvesAreRejected) {
  const auto lightlike = polynomial_curve({1, 0, 1}, {0, 0, 0});
  expect_kind(ErrorKind::LightlikeTangent, [&] { frenet_apparatus(lightlike, 0.1); });
  const auto straight = polynomial_curve({1, 0, 0}, {0, 0, 0});
  expect_kind(ErrorKind::VanishingCurvature, [&] { frenet_apparatus(straight, 0.1); });
  const auto null_normal = polynomial_curve({1, 0, 0}, {0, 0.5, 0.5});
  expect_kind(ErrorKind::LightlikeNormal, [&] { frenet_apparatus(null_normal, 0.1); });
}

TEST(Darboux, HelixIndicatrixIsConstant) {
  const ParamCurve helix = timelike_helix();
  const LVec3 c0 = darboux_indicatrix(frenet_apparatus(helix, 0.0));
  const LVec3 c1 = darboux_indicatrix(frenet_apparatus(helix, 2.3));
  EXPECT_LT(max_abs_diff(c0, c1), 1e-12);
  // The helix winds about the x3 axis.
  EXPECT_NEAR(std::abs(c0.x3), 1.0, 1e-12);
}

TEST(ArcLength, HelixHasConstantSpeed) {
  EXPECT_NEAR(arc_length(timelike_helix(), 0.0, 2.0), 2.0 * std::sqrt(3.0), 1e-10);
  EXPECT_NEAR(arc_length(timelike_helix(), 2.0, 0.0), -2.0 * std::sqrt(3.0), 1e-10);
}

TEST(ArcLength, NullVelocityIsReported) {
  expect_kind(ErrorKind::NullVelocityEncountered,
              [] { arc_length(polynomial_curve({1, 0, 1}, {0, 0, 0}), 0.0, 1.0); });
}

TEST(Helix, DetectsConstantRatio) {
  const auto grid = num::linspace(-2.0, 2.0, 33);
  const HelixResult h = helix_test(timelike_helix(), grid);
  EXPECT_TRUE(h.is_helix);
  EXPECT_NEAR(h.ratio, 2.0, 1e-12);
  EXPECT_FALSE(helix_test(twisted_cubic(), num::linspace(0.2, 1.0, 33)).is_helix);
}

TEST(BertrandFit, HelixIsDegenerate) {
  const BertrandFit fit = bertrand_fit(timelike_helix(), num::linspace(-2.0, 2.0, 16));
  EXPECT_TRUE(fit.is_bertrand);
  EXPECT_TRUE(fit.non_unique);
  EXPECT_LT(fit.residual, 1e-10);
}

TEST(BertrandFit, TwistedCubicIsNotBertrand) {
  const BertrandFit fit = bertrand_fit(twisted_cubic(), num::linspace(0.2, 1.0, 64));
  EXPECT_FALSE(fit.is_bertrand);
  EXPECT_NEAR(fit.residual, oracle::kCubicBertrandResidual, 1e-9);
}

TEST(Sampled, JetsTrackTheAnalyticCurve) {
  const ParamCurve helix = timelike_helix();
  const double h = 0.01;
  std::vector<LVec3> pts;
  for (int i = 0; i <= 200; ++i) pts.push_back(helix.point(i * h));
  const ParamCurve s = ParamCurve::sampled(0.0, h, pts);
  EXPECT_EQ(s.max_order(), ParamCurve::kMaxSampledOrder);
  EXPECT_DOUBLE_EQ(s.step(), h);
  for (double t : {0.5, 0.505, 1.2345}) {
    const Jet a = helix.jet_at(t, 3);
    const Jet b = s.jet_at(t, 3);
    EXPECT_LT(max_abs_diff(a.d[0], b.d[0]), 1e-9) << t;
    EXPECT_LT(max_abs_diff(a.d[1], b.d[1]), 1e-7) << t;
    EXPECT_LT(max_abs_diff(a.d[2], b.d[2]), 1e-5) << t;
    EXPECT_LT(max_abs_diff(a.d[3], b.d[3]), 1e-3) << t;
  }
  EXPECT_NEAR(arc_length(s, 0.5, 1.5), std::sqrt(3.0), 1e-9);
  expect_kind(ErrorKind::OrderUnavailable, [&] { s.jet_at(1.0, 4); });
  expect_kind(ErrorKind::OutOfDomain, [&] { s.jet_at(2.5, 0); });
}

TEST(Sampled, BreakpointsAndNodes) {
  std::vector<LVec3> pts(11);
  for (int i = 0; i <= 10; ++i) pts[i] = {i * 0.1, 0.0, 0.0};
  const ParamCurve s = ParamCurve::sampled(0.0, 0.1, pts);
  EXPECT_EQ(s.breakpoints(0.25, 0.55).size(), 3u);
  EXPECT_EQ(s.nodes().size(), 11u);
  EXPECT_EQ(s.nodes(2).size(), 7u);
  EXPECT_TRUE(timelike_helix().breakpoints(0.0, 1.0).empty());
}

TEST(Sampled, TooFewSamplesRejected) {
  expect_kind(ErrorKind::InvalidArgument,
              [] { ParamCurve::sampled(0.0, 0.1, std::vector<LVec3>(5)); });
}

TEST(Sampled, ResampledFromNonUniformAbscissa) {
  std::vector<double> t;
  std::vector<LVec3> pts;
  for (int i = 0; i <= 80; ++i) {
    const double x = std::pow(i / 80.0, 1.3);
    t.push_back(x);
    pts.push_back({x, x * x, 0.0});
  }
  const ParamCurve r = ParamCurve::resampled(t, pts, 101);
  EXPECT_NEAR(r.domain().lo, 0.0, 1e-15);
  EXPECT_NEAR(r.domain().hi, 1.0, 1e-15);
  EXPECT_NEAR(r.point(0.5).x2, 0.25, 1e-4);
}

TEST(IntegrateAlong, SampledCellsAreExactForPolynomialData) {
  std::vector<LVec3> pts;
  for (int i = 0; i <= 20; ++i) {
    const double x = i * 0.05;
    pts.push_back({x * x, 0.0, 0.0});
  }
  const ParamCurve s = ParamCurve::sampled(0.0, 0.05, pts);
  const double v = integrate_along(s, [&](double x) { return s.point(x).x1; }, 0.12, 0.93);
  EXPECT_NEAR(v, (std::pow(0.93, 3) - std::pow(0.12, 3)) / 3.0, 1e-13);
}
