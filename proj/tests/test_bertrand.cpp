#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lgeom/bertrand.hpp"
#include "lgeom/numerics.hpp"
#include "lgeom/registry.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using namespace lgeom;
using lgeom::testing::expect_kind;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
const double kHalfSqrt2 = std::sqrt(2.0) / 2.0;

SlopeParams example_params() { return SlopeParams::from_angle(kPi / 4, kE); }

// Closed-form Bertrand curve of the geodesic example.
LVec3 example_curve(double v) {
  const double c = kHalfSqrt2 * kE;
  return {c * std::cos(1.0) * std::sinh(v), -c * std::sin(1.0) * v,
          c * std::cos(1.0) * (std::cosh(v) - 1.0)};
}

// Closed-form surface of the geodesic example at theta = pi/4.
LVec3 example_surface(double u, double v) {
  const double xi = std::log(u);
  return kHalfSqrt2 * u * LVec3{std::cos(xi) * std::cosh(v), -std::sin(xi),
                                std::cos(xi) * std::sinh(v)};
}

}  // namespace

TEST(SlopeParams, AngleForm) {
  const SlopeParams sp = example_params();
  EXPECT_NEAR(sp.xi, 1.0, 1e-15);
  EXPECT_NEAR(sp.a, oracle::kExampleA, 1e-14);
  EXPECT_NEAR(sp.radius(), kE * kHalfSqrt2, 1e-14);
  expect_kind(ErrorKind::InvalidArgument, [] { SlopeParams::from_angle(0.0, 1.0); });
  expect_kind(ErrorKind::InvalidArgument, [] { SlopeParams::from_angle(2.0, 1.0); });
  expect_kind(ErrorKind::InvalidArgument, [] { SlopeParams::from_angle(1.0, -1.0); });
  expect_kind(ErrorKind::InvalidArgument, [] { SlopeParams::from_bertrand(0.0, 0.1); });
}

TEST(SlopeParams, ResolveAngleRecoversTheExample) {
  const SlopeParams sp = resolve_angle(SlopeParams::from_bertrand(oracle::kExampleA, 1.0));
  EXPECT_TRUE(sp.has_angle);
  EXPECT_NEAR(sp.theta, kPi / 4, 1e-10);
  EXPECT_NEAR(sp.u, kE, 1e-9);
  expect_kind(ErrorKind::NoCompatibleAngle,
              [] { resolve_angle(SlopeParams::from_bertrand(5.0, -1.0)); });
  expect_kind(ErrorKind::NoCompatibleAngle,
              [] { resolve_angle(SlopeParams::from_bertrand(-1.0, 0.2)); });
}

TEST(SlopeParams, ResolvedAngleReproducesTheBertrandPair) {
  for (const auto& [theta, u] : {std::pair{kPi / 3, 0.5}, std::pair{kPi / 6, 2.0},
                                 std::pair{1.2, 0.9}, std::pair{0.3, 1.7}}) {
    const SlopeParams ref = SlopeParams::from_angle(theta, u);
    const SlopeParams sp = resolve_angle(SlopeParams::from_bertrand(ref.a, ref.xi));
    EXPECT_NEAR(sp.a, ref.a, 1e-12) << theta;
    EXPECT_NEAR(sp.xi, ref.xi, 1e-12) << theta;
  }
}

TEST(Synthesis, ExampleMatchesClosedForm) {
  const SphericalCurve f = geodesic_hyperbola();
  for (double v : num::linspace(0.0, 2.0, 17)) {
    EXPECT_LT(max_abs_diff(synthesize_bertrand(example_params(), f, v), example_curve(v)), 1e-9)
        << v;
  }
  const LVec3 g1 = synthesize_bertrand(example_params(), f, 1.0);
  EXPECT_NEAR(g1.x1, oracle::kExampleGammaX1, 1e-9);
  EXPECT_NEAR(g1.x2, oracle::kExampleGammaX2, 1e-9);
  EXPECT_NEAR(g1.x3, oracle::kExampleGammaX3, 1e-9);
}

TEST(Synthesis, PanelCurveAgreesWithDirectQuadrature) {
  const SphericalCurve f = warped(2.0);
  const SlopeParams sp = SlopeParams::from_angle(kPi / 3, 1.5);
  const ParamCurve g = bertrand_curve(sp, f);
  for (double v : {-0.6, -0.1, 0.0, 0.37}) {
    EXPECT_LT(max_abs_diff(g.point(v), synthesize_bertrand(sp, f, v)), 1e-10) << v;
  }
  // Velocity is spacelike with <g', g'> = a^2 / cos^2(xi).
  const LVec3 d = g.jet_at(0.2, 1).d[1];
  EXPECT_NEAR(minkowski_inner(d, d), sp.radius() * sp.radius(), 1e-12);
}

TEST(Curvatures, ExampleValues) {
  const SphericalCurve f = geodesic_hyperbola();
  for (double v : {0.0, 1.0, 2.0}) {
    const BertrandCurvatures bc = bertrand_curvatures(example_params(), f, v);
    EXPECT_NEAR(bc.kappa, oracle::kExampleKappa, 1e-12);
    EXPECT_NEAR(bc.tau, oracle::kExampleTau, 1e-12);
    EXPECT_EQ(bc.eps, 1);
  }
}

TEST(Curvatures, LinearRelationAndFrenetAgreement) {
  const SphericalCurve f = warped(2.0);
  for (const SlopeParams& sp :
       {example_params(), SlopeParams::from_angle(kPi / 6, 0.8), SlopeParams::from_bertrand(-0.7, 0.4)}) {
    const ParamCurve g = bertrand_curve(sp, f);
    for (double v : {-0.4, 0.0, 0.25}) {
      const BertrandCurvatures bc = bertrand_curvatures(sp, f, v);
      EXPECT_NEAR(sp.a * (bc.eps * bc.kappa - std::tan(sp.xi) * bc.tau), 1.0, 1e-12);
      const FrenetData fd = frenet_apparatus(g, v);
      EXPECT_EQ(fd.kind, FrenetCase::SpacelikeTimelikeNormal);
      EXPECT_NEAR(fd.kappa, bc.kappa, 1e-9);
      EXPECT_NEAR(fd.tau, bc.tau, 1e-9);
      const FrenetData cf = bertrand_frames(sp, f, v);
      EXPECT_LT(max_abs_diff(cf.T, fd.T), 1e-10);
      EXPECT_LT(max_abs_diff(cf.N, fd.N), 1e-10);
      EXPECT_LT(max_abs_diff(cf.B, fd.B), 1e-10);
    }
  }
}

TEST(Curvatures, SignConflictIsReported) {
  // kg = 0.75 and tan(xi) < -4/3 make 1 + tan(xi) kg negative.
  expect_kind(ErrorKind::SignConflict, [] {
    bertrand_curvatures(SlopeParams::from_bertrand(1.0, -1.2), pseudo_circle(0.6), 0.0);
  });
}

TEST(Darboux, IndicatrixIsTheEvolute) {
  const DarbouxMatch ex = darboux_equals_evolute(example_params(), geodesic_hyperbola(), 0.5);
  EXPECT_LT(ex.residual, 1e-12);
  const ParamCurve g = bertrand_curve(example_params(), geodesic_hyperbola());
  const LVec3 c = darboux_indicatrix(frenet_apparatus(g, 0.5));
  EXPECT_LT(max_abs_diff(static_cast<double>(ex.sign) * c, {0, 1, 0}), 1e-12);

  for (const auto& spec : standard_curve_specs()) {
    const SphericalCurve f = make_curve(spec);
    for (double v : {-0.3, 0.2}) {
      EXPECT_LT(darboux_equals_evolute(SlopeParams::from_angle(kPi / 3, 1.5), f, v).residual, 1e-9)
          << spec;
    }
  }
}

TEST(Surface, VelocityCurveAndIntegral) {
  const SphericalCurve f = pseudo_circle(0.6);
  const SlopeParams sp = SlopeParams::from_angle(kPi / 3, 1.5);
  const auto grid = num::linspace(-1.0, 1.0, 9);
  EXPECT_LT(surface_velocity_residual(sp, f, grid), 1e-6);
  for (double v : grid) {
    EXPECT_LT(max_abs_diff(integrate_surface_curve(sp, f, v), synthesize_bertrand(sp, f, v)), 1e-12);
  }
  const ParamCurve table = sample_surface_integral(sp, f, -1.0, 1.0, 81);
  for (double v : {-1.0, -0.25, 0.5, 1.0}) {
    EXPECT_LT(max_abs_diff(table.point(v), synthesize_bertrand(sp, f, v)), 1e-10) << v;
  }
}

TEST(Surface, MeshMatchesClosedForm) {
  const SurfacePatch p =
      surface_mesh(kPi / 4, geodesic_hyperbola(), {0.5, kE}, {-1.5, 1.5}, 32, 64);
  ASSERT_EQ(p.vertices.size(), 32u * 64u);
  for (std::size_t i = 0; i < p.nu; ++i) {
    for (std::size_t j = 0; j < p.nv; ++j) {
      EXPECT_LT(max_abs_diff(p.vertex(i, j), example_surface(p.us[i], p.vs[j])), 1e-12);
    }
  }
  EXPECT_LT(max_abs_diff(p.vertex(31, 0), example_surface(kE, -1.5)), 1e-12);
}

TEST(Surface, UnitRowIsScaledGenerator) {
  const SphericalCurve f = warped(2.0);
  const SurfacePatch p = surface_mesh(kPi / 3, f, {0.5, 1.5}, {-0.5, 0.5}, 3, 11);
  ASSERT_EQ(p.us[1], 1.0);
  for (std::size_t j = 0; j < p.nv; ++j) {
    EXPECT_LT(max_abs_diff(p.vertex(1, j), std::sin(kPi / 3) * f.point(p.vs[j])), 1e-15);
  }
}

TEST(Surface, DegenerateGridsRejected) {
  const SphericalCurve f = geodesic_hyperbola();
  expect_kind(ErrorKind::InvalidRange, [&] { surface_mesh(1.0, f, {1, 1}, {0, 1}, 2, 2); });
  expect_kind(ErrorKind::InvalidRange, [&] { surface_mesh(1.0, f, {0.5, 1}, {0, 1}, 1, 4); });
  expect_kind(ErrorKind::InvalidRange, [&] { surface_mesh(1.0, f, {-1, 1}, {0, 1}, 2, 2); });
}

TEST(Helicity, ConstantCurvatureIffHelix) {
  const auto grid = num::linspace(-1.0, 1.0, 21);
  const SlopeParams sp = example_params();
  const HelixEquivalence geo = helix_equivalence(geodesic_hyperbola(), sp, grid);
  EXPECT_TRUE(geo.kg_const);
  EXPECT_TRUE(geo.is_helix);
  const HelixEquivalence pc = helix_equivalence(pseudo_circle(0.6), sp, grid);
  EXPECT_TRUE(pc.kg_const && pc.is_helix);
  const HelixEquivalence w = helix_equivalence(warped(2.0), sp, num::linspace(-0.5, 0.3, 21));
  EXPECT_FALSE(w.kg_const);
  EXPECT_FALSE(w.is_helix);
  EXPECT_LT(w.derivative_residual, 1e-6);
}

TEST(Inverse, RecoversTheGenerator) {
  const auto grid = num::linspace(-1.2, 1.2, 97);
  for (const auto& spec : {"paper-geodesic", "pseudo-circle:k=0.6"}) {
    const SphericalCurve f = make_curve(spec);
    const SlopeParams sp = SlopeParams::from_angle(kPi / 3, 1.5);
    const ParamCurve g = bertrand_curve(sp, f);
    const SphericalCurve back = inverse_spherical(g, sp.xi, grid);
    for (double v : {-1.0, 0.0, 0.6}) {
      EXPECT_LT(max_abs_diff(back.point(v), f.point(v)), 1e-8) << spec << " " << v;
    }
  }
}

TEST(Inverse, RejectsCurvesOutsideTheFamily) {
  const auto grid = num::linspace(0.2, 1.0, 40);
  expect_kind(ErrorKind::NotBertrand, [&] { inverse_spherical(twisted_cubic(), 0.3, grid); });
  expect_kind(ErrorKind::WrongCausalCase,
              [] { inverse_spherical(timelike_helix(), 0.3, num::linspace(-1.0, 1.0, 40)); });
}
