#include "lgeom/lorentz.hpp"

#include <algorithm>
#include <ostream>

#include "lgeom/error.hpp"

namespace lgeom {

std::ostream& operator<<(std::ostream& os, const LVec3& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
}

bool is_finite(const LVec3& v) noexcept {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

double max_abs(const LVec3& v) noexcept {
  return std::max({std::abs(v.x1), std::abs(v.x2), std::abs(v.x3)});
}

double max_abs_diff(const LVec3& a, const LVec3& b) noexcept { return max_abs(a - b); }

double euclid_norm(const LVec3& v) noexcept { return std::hypot(v.x1, v.x2, v.x3); }

const char* to_string(CausalClass c) noexcept {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Lightlike: return "lightlike";
  }
  return "unknown";
}

const char* to_string(AngleCase c) noexcept {
  switch (c) {
    case AngleCase::SpacelikePairSpacelikePlane: return "spacelike-pair/spacelike-plane";
    case AngleCase::SpacelikePairTimelikePlane: return "spacelike-pair/timelike-plane";
    case AngleCase::TimelikePair: return "timelike-pair";
    case AngleCase::SpacelikeTimelike: return "spacelike-timelike";
  }
  return "unknown";
}

CausalClass causal_class(const LVec3& x) {
  const double scale = max_abs(x);
  if (scale == 0.0) return CausalClass::Spacelike;
  const double q = minkowski_inner(x, x);
  if (std::abs(q) <= kCausalTol * std::max(1.0, scale * scale)) return CausalClass::Lightlike;
  return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

double lnorm(const LVec3& x) {
  if (causal_class(x) == CausalClass::Lightlike) return 0.0;
  return std::sqrt(std::abs(minkowski_inner(x, x)));
}

AngleResult lorentz_angle(const LVec3& x, const LVec3& y) {
  const CausalClass cx = causal_class(x);
  const CausalClass cy = causal_class(y);
  if (max_abs(x) == 0.0 || max_abs(y) == 0.0 || cx == CausalClass::Lightlike ||
      cy == CausalClass::Lightlike) {
    fail(ErrorKind::LightlikeInput, "angle needs two non-null, non-zero vectors");
  }
  const double xx = minkowski_inner(x, x);
  const double yy = minkowski_inner(y, y);
  const double xy = minkowski_inner(x, y);
  const double ratio = std::abs(xy) / (std::sqrt(std::abs(xx)) * std::sqrt(std::abs(yy)));

  if (cx == CausalClass::Spacelike && cy == CausalClass::Spacelike) {
    const double gram = xx * yy - xy * xy;
    if (std::abs(gram) <= kCausalTol * std::abs(xx * yy)) {
      fail(ErrorKind::DegeneratePlane, "spacelike pair spans a lightlike plane");
    }
    if (gram > 0.0) {
      return {std::acos(std::min(1.0, ratio)), AngleCase::SpacelikePairSpacelikePlane};
    }
    return {std::acosh(std::max(1.0, ratio)), AngleCase::SpacelikePairTimelikePlane};
  }
  if (cx == CausalClass::Timelike && cy == CausalClass::Timelike) {
    return {std::acosh(std::max(1.0, ratio)), AngleCase::TimelikePair};
  }
  return {std::asinh(ratio), AngleCase::SpacelikeTimelike};
}

bool on_sphere(const LVec3& x, Sphere which, double tol) {
  const double q = minkowski_inner(x, x);
  return which == Sphere::H2 ? std::abs(q + 1.0) <= tol : std::abs(q - 1.0) <= tol;
}

}  // namespace lgeom
