#include <gtest/gtest.h>

#include <cmath>

#include "lgeom/registry.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace lgeom;
using lgeom::testing::expect_kind;

TEST(Registry, ResolvesEverySpec) {
  for (const auto& spec : standard_curve_specs()) {
    const SphericalCurve c = make_curve(spec);
    EXPECT_TRUE(c.unit_speed()) << spec;
    EXPECT_TRUE(c.domain().contains(0.0)) << spec;
  }
}

TEST(Registry, NamesRoundTrip) {
  EXPECT_EQ(make_curve("paper-geodesic").name(), "paper-geodesic");
  const SphericalCurve pc = make_curve("pseudo-circle:k=0.5");
  EXPECT_EQ(pc.name(), "pseudo-circle:k=0.5");
  const SphericalCurve w = make_curve("warped:lambda=2,mu=1");
  EXPECT_EQ(make_curve(w.name()).name(), w.name());
}

TEST(Registry, GeodesicIsTheHyperbolaInTheX1X3Plane) {
  const SphericalCurve g = make_curve("paper-geodesic");
  const LVec3 p = g.point(0.7);
  EXPECT_DOUBLE_EQ(p.x1, std::cosh(0.7));
  EXPECT_DOUBLE_EQ(p.x2, 0.0);
  EXPECT_DOUBLE_EQ(p.x3, std::sinh(0.7));
}

TEST(Registry, WarpedDomainIsSymmetricWithoutBend) {
  const SphericalCurve w = make_curve("warped:lambda=2");
  EXPECT_NEAR(w.domain().hi, oracle::kWarpedHalfLength, 1e-9);
  EXPECT_NEAR(w.domain().lo, -oracle::kWarpedHalfLength, 1e-9);
  const SphericalCurve raw = warped_raw(2.0, 0.0);
  EXPECT_NEAR(raw.domain().lo, -raw.domain().hi, 1e-14);
}

TEST(Registry, MalformedSpecsThrowSpecError) {
  for (const char* bad : {"", "nothing", "pseudo-circle", "pseudo-circle:k=", "pseudo-circle:k=x",
                          "pseudo-circle:k=0.5,k=0.4", "pseudo-circle:k=0.5,", "warped:mu=1",
                          "warped:lambda=2,nu=1", "paper-geodesic:k=1", "warped:lambda=inf"}) {
    EXPECT_THROW(make_curve(bad), SpecError) << bad;
  }
}

TEST(Registry, OutOfFamilyParametersThrowGeometryError) {
  expect_kind(ErrorKind::InvalidArgument, [] { make_curve("pseudo-circle:k=1"); });
  expect_kind(ErrorKind::InvalidArgument, [] { make_curve("warped:lambda=0.5"); });
}

TEST(Registry, ReferenceCurves) {
  EXPECT_NEAR(timelike_helix().domain().hi, 2.0 * 3.141592653589793, 1e-15);
  const Jet j = twisted_cubic().jet_at(0.5, 4);
  EXPECT_EQ(j.d[0], (LVec3{0.5, 0.25, 0.0125}));
  EXPECT_EQ(j.d[3], (LVec3{0.0, 0.0, 0.6}));
  EXPECT_EQ(j.d[4], (LVec3{}));
}
