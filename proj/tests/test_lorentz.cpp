#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lgeom/error.hpp"
#include "lgeom/identities.hpp"
#include "lgeom/lorentz.hpp"
#include "test_support.hpp"

using namespace lgeom;
using lgeom::testing::expect_kind;

namespace {

// Metric diag(1, 1, -1) applied by hand, independent of minkowski_inner.
double metric(const LVec3& x, const LVec3& y) {
  const double g[3] = {1.0, 1.0, -1.0};
  const double a[3] = {x.x1, x.x2, x.x3};
  const double b[3] = {y.x1, y.x2, y.x3};
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += g[i] * a[i] * b[i];
  return s;
}

// Rule of Sarrus.
double sarrus(const LVec3& x, const LVec3& y, const LVec3& z) {
  return x.x1 * y.x2 * z.x3 + x.x2 * y.x3 * z.x1 + x.x3 * y.x1 * z.x2 - x.x3 * y.x2 * z.x1 -
         x.x1 * y.x3 * z.x2 - x.x2 * y.x1 * z.x3;
}

}  // namespace

TEST(Lorentz, InnerProductMatchesMetric) {
  const LVec3 x{1.5, -2.0, 0.25};
  const LVec3 y{-0.5, 3.0, 4.0};
  EXPECT_DOUBLE_EQ(minkowski_inner(x, y), metric(x, y));
  EXPECT_DOUBLE_EQ(minkowski_inner({0, 0, 1}, {0, 0, 1}), -1.0);
}

TEST(Lorentz, CrossOfBasisVectors) {
  const LVec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  EXPECT_EQ(lcross(e1, e2), (LVec3{0, 0, -1}));
  EXPECT_EQ(lcross(e2, e3), (LVec3{1, 0, 0}));
  EXPECT_EQ(lcross(e3, e1), (LVec3{0, 1, 0}));
}

TEST(Lorentz, CrossRepresentsDeterminantThroughMetric) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const LVec3 x{d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng)}, z{d(rng), d(rng), d(rng)};
    EXPECT_NEAR(metric(lcross(x, y), z), sarrus(x, y, z), 1e-12);
    EXPECT_NEAR(det3(x, y, z), sarrus(x, y, z), 1e-12);
  }
}

TEST(Lorentz, CausalClasses) {
  EXPECT_EQ(causal_class({0, 0, 1}), CausalClass::Timelike);
  EXPECT_EQ(causal_class({1, 0, 0}), CausalClass::Spacelike);
  EXPECT_EQ(causal_class({1, 1, std::sqrt(2.0)}), CausalClass::Lightlike);
  EXPECT_EQ(causal_class({0, 0, 0}), CausalClass::Spacelike);
  EXPECT_EQ(causal_class({3e5, 4e5, 5e5}), CausalClass::Lightlike);
}

TEST(Lorentz, NormAndSpheres) {
  EXPECT_DOUBLE_EQ(lnorm({3, 4, 0}), 5.0);
  EXPECT_DOUBLE_EQ(lnorm({0, 3, 5}), 4.0);
  EXPECT_EQ(lnorm({1, 0, 1}), 0.0);
  EXPECT_TRUE(on_sphere({std::cosh(1.0), 0, std::sinh(1.0)}, Sphere::S12));
  EXPECT_TRUE(on_sphere({std::sinh(1.0), 0, std::cosh(1.0)}, Sphere::H2));
  EXPECT_FALSE(on_sphere({0, 0, 1}, Sphere::S12));
}

TEST(Lorentz, AngleInEachCase) {
  const auto a = lorentz_angle({1, 0, 0}, {std::cos(0.3), std::sin(0.3), 0});
  EXPECT_EQ(a.kind, AngleCase::SpacelikePairSpacelikePlane);
  EXPECT_NEAR(a.value, 0.3, 1e-12);

  const auto b = lorentz_angle({1, 0, 0}, {std::cosh(0.5), 0, std::sinh(0.5)});
  EXPECT_EQ(b.kind, AngleCase::SpacelikePairTimelikePlane);
  EXPECT_NEAR(b.value, 0.5, 1e-8);

  const auto c = lorentz_angle({0, 0, 1}, {std::sinh(0.7), 0, std::cosh(0.7)});
  EXPECT_EQ(c.kind, AngleCase::TimelikePair);
  EXPECT_NEAR(c.value, 0.7, 1e-8);

  const auto d = lorentz_angle({1, 0, 0}, {std::sinh(0.4), 0, std::cosh(0.4)});
  EXPECT_EQ(d.kind, AngleCase::SpacelikeTimelike);
  EXPECT_NEAR(d.value, 0.4, 1e-12);
}

TEST(Lorentz, AngleRejectsNullAndDegenerateInput) {
  expect_kind(ErrorKind::LightlikeInput, [] { lorentz_angle({1, 0, 1}, {1, 0, 0}); });
  expect_kind(ErrorKind::LightlikeInput, [] { lorentz_angle({0, 0, 0}, {1, 0, 0}); });
  expect_kind(ErrorKind::DegeneratePlane, [] { lorentz_angle({1, 0, 0}, {1, 1, 1}); });
}

TEST(CrossIdentities, RandomTriplesStayAtRoundoff) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  std::vector<Triple> batch(10000);
  for (auto& t : batch) {
    for (auto& v : t) v = {d(rng), d(rng), d(rng)};
  }
  const CrossResiduals r = cross_residuals(batch);
  EXPECT_LE(r.worst(), 1e-10);
  EXPECT_LE(r.lagrange, 1e-10);
  EXPECT_LE(r.double_cross, 1e-10);
}

TEST(CrossIdentities, OrthonormalTripleIsExact) {
  // A single triple run through the identities: Lagrange's identity for
  // orthonormal spacelike x, y gives <x cross y, x cross y> = -1.
  const Triple t{LVec3{1, 0, 0}, LVec3{0, 1, 0}, LVec3{0, 0, 1}};
  const LVec3 c = lcross(t[0], t[1]);
  EXPECT_DOUBLE_EQ(minkowski_inner(c, c), -1.0);
  EXPECT_EQ(cross_residuals(t).worst(), 0.0);
}
