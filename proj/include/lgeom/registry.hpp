#pragma once

// Built-in spherical curves, addressable by stable spec strings:
//   paper-geodesic
//   pseudo-circle:k=<real>
//   warped:lambda=<real>[,mu=<real>]

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgeom/desitter.hpp"

namespace lgeom {

/// Malformed curve spec string.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f(v) = (cosh v, 0, sinh v) on [-4, 4]; a geodesic of S12.
SphericalCurve geodesic_hyperbola();

/// f(v) = (m cosh(v/m), k, m sinh(v/m)) with m = sqrt(1 - k^2), on [-4, 4].
/// Constant geodesic curvature k/m. Requires |k| < 1.
SphericalCurve pseudo_circle(double k);

/// Raw parametrization
///   f(t) = (cosh(lambda t) cos psi, cosh(lambda t) sin psi, sinh(lambda t)),
///   psi = t + mu t^2,
/// on the largest interval around 0 inside [-0.6, 0.6] where
/// lambda^2 - cosh^2(lambda t) psi'(t)^2 >= 0.15 lambda^2.
SphericalCurve warped_raw(double lambda, double mu = 0.0);

/// The warped curve by arc length, with v = 0 at t = 0.
SphericalCurve warped(double lambda, double mu = 0.0);

/// (cos t, sin t, 2t) on [-2pi, 2pi]: a timelike circular helix with
/// curvature 1/3 and torsion 2/3.
ParamCurve timelike_helix();

/// (t, t^2, t^3/10) on [-1, 1]: spacelike with spacelike normal, and not a
/// Bertrand curve.
ParamCurve twisted_cubic();

/// Resolves a spec string. Throws SpecError for malformed strings and
/// GeometryError for parameters outside the family's range.
SphericalCurve make_curve(std::string_view spec);

/// Specs of the curves exercised by the verification suite.
std::vector<std::string> standard_curve_specs();

}  // namespace lgeom
