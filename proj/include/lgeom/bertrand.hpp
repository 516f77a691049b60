#pragma once

// Spacelike Bertrand curves generated by timelike curves on S12 and the
// timelike constant slope surfaces that carry their velocity curves.
//
// With a = u sin(theta) cos(xi) and xi = cot(theta) ln(u), a unit-speed
// timelike f on S12 produces
//   gamma(v) = a int_0^v f + a tan(xi) int_0^v f x f',
// and the surface x(u, v) = u sin(theta) (cos(xi) f(v) + sin(xi) f(v) x f'(v)).

#include <span>
#include <vector>

#include "lgeom/curves.hpp"
#include "lgeom/desitter.hpp"

namespace lgeom {

struct SlopeParams {
  double theta = 0.0;  // meaningful only when has_angle
  double u = 0.0;      // meaningful only when has_angle
  double xi = 0.0;
  double a = 0.0;
  bool has_angle = false;

  /// theta in (0, pi/2], u > 0; derives xi and a.
  static SlopeParams from_angle(double theta, double u);
  /// Direct Bertrand parameters; a != 0. No surface angle attached.
  static SlopeParams from_bertrand(double a, double xi);

  /// Scale u sin(theta), which equals a / cos(xi).
  double radius() const;
};

/// Solves exp(xi tan(theta)) sin(theta) cos(xi) = a for theta in (0, pi/2] and
/// returns the full angle parametrization. Throws NoCompatibleAngle.
SlopeParams resolve_angle(const SlopeParams& sp);

LVec3 slope_surface_point(const SlopeParams& sp, const SphericalCurve& f, double v);

/// Direct quadrature of the two defining integrals from 0 to v.
LVec3 synthesize_bertrand(const SlopeParams& sp, const SphericalCurve& f, double v);

/// The Bertrand curve as a ParamCurve over the domain of f (which must
/// contain 0). Points come from panel-wise cumulative quadrature; derivatives
/// are exact in terms of the jets of f.
ParamCurve bertrand_curve(const SlopeParams& sp, const SphericalCurve& f, int panels = 256);

struct BertrandCurvatures {
  double kappa = 0.0;
  double tau = 0.0;
  int eps = 1;
};

/// Closed-form curvature and torsion. eps is fixed by eps cos(xi) / a > 0;
/// throws SignConflict when that eps would make kappa negative.
BertrandCurvatures bertrand_curvatures(const SlopeParams& sp, const SphericalCurve& f, double v);

/// Closed-form Frenet frame of the Bertrand curve (spacelike, timelike normal).
FrenetData bertrand_frames(const SlopeParams& sp, const SphericalCurve& f, double v);

struct DarbouxMatch {
  double residual = 0.0;
  /// +1 when the indicatrix equals the evolute, -1 when it equals its negative.
  int sign = 1;
};

/// Compares the Darboux indicatrix of the Bertrand curve (from its jets) with
/// the pseudo-spherical evolute of f.
DarbouxMatch darboux_equals_evolute(const SlopeParams& sp, const SphericalCurve& f, double v);

/// Recovers the spherical generator eps (cos(xi) T - sin(xi) B) of a spacelike
/// Bertrand curve with timelike normal, sampled by its own arc length nu with
/// nu = 0 at curve parameter 0 (or at grid.front() when 0 is outside). Throws
/// NotBertrand and WrongCausalCase.
SphericalCurve inverse_spherical(const ParamCurve& curve, double xi, std::span<const double> grid);

/// Max over the grid of |gamma'(v) - x(u, v)| with gamma' a central difference
/// of synthesize_bertrand.
double surface_velocity_residual(const SlopeParams& sp, const SphericalCurve& f, std::span<const double> grid);

/// Quadrature of the surface's v-curve at fixed u from 0 to v.
LVec3 integrate_surface_curve(const SlopeParams& sp, const SphericalCurve& f, double v);

/// Uniform table of integrate_surface_curve on [v0, v1] with n points, built by
/// cell-wise accumulation.
ParamCurve sample_surface_integral(const SlopeParams& sp, const SphericalCurve& f, double v0, double v1,
                        std::size_t n, Exec exec = Exec::Parallel);

/// synthesize_bertrand at every grid point.
std::vector<LVec3> sample_synthesized(const SlopeParams& sp, const SphericalCurve& f,
                                      std::span<const double> grid, Exec exec = Exec::Parallel);

/// gamma at every grid point.
std::vector<LVec3> sample_bertrand(const ParamCurve& curve, std::span<const double> grid,
                                   Exec exec = Exec::Parallel);

struct SurfacePatch {
  std::size_t nu = 0;
  std::size_t nv = 0;
  std::vector<double> us;
  std::vector<double> vs;
  /// Row-major: vertex(i, j) at u = us[i], v = vs[j].
  std::vector<LVec3> vertices;

  const LVec3& vertex(std::size_t i, std::size_t j) const { return vertices[i * nv + j]; }
};

SurfacePatch surface_mesh(double theta, const SphericalCurve& f, Interval u_range,
                          Interval v_range, std::size_t nu, std::size_t nv,
                          Exec exec = Exec::Parallel);

struct HelixEquivalence {
  bool kg_const = false;
  bool is_helix = false;
  /// Max deviation of the closed-form kappa', tau' from central differences.
  double derivative_residual = 0.0;

  bool agree() const { return kg_const == is_helix; }
};

HelixEquivalence helix_equivalence(const SphericalCurve& f, const SlopeParams& sp,
                        std::span<const double> grid);

}  // namespace lgeom
