#pragma once

// Linear algebra in Minkowski 3-space with signature (+,+,-).

#include <cmath>
#include <iosfwd>

namespace lgeom {

struct LVec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr LVec3& operator+=(const LVec3& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr LVec3& operator-=(const LVec3& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr LVec3& operator*=(double s) {
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }

  constexpr bool operator==(const LVec3&) const = default;
};

constexpr LVec3 operator+(LVec3 a, const LVec3& b) { return a += b; }
constexpr LVec3 operator-(LVec3 a, const LVec3& b) { return a -= b; }
constexpr LVec3 operator-(const LVec3& a) { return {-a.x1, -a.x2, -a.x3}; }
constexpr LVec3 operator*(double s, LVec3 a) { return a *= s; }
constexpr LVec3 operator*(LVec3 a, double s) { return a *= s; }
constexpr LVec3 operator/(LVec3 a, double s) { return a *= (1.0 / s); }

std::ostream& operator<<(std::ostream& os, const LVec3& v);

bool is_finite(const LVec3& v) noexcept;

/// Largest absolute coordinate. Used as the scale for relative tolerances.
double max_abs(const LVec3& v) noexcept;

/// Componentwise max |a - b|.
double max_abs_diff(const LVec3& a, const LVec3& b) noexcept;

/// Euclidean length of the coordinate triple (not a Lorentzian quantity).
double euclid_norm(const LVec3& v) noexcept;

enum class CausalClass { Spacelike, Timelike, Lightlike };

const char* to_string(CausalClass c) noexcept;

/// Classification tolerance relative to the squared coordinate scale.
inline constexpr double kCausalTol = 1e-9;
/// Tolerance on |<x,x> -/+ 1| for membership of H2 and S12.
inline constexpr double kSphereTol = 1e-9;

constexpr double minkowski_inner(const LVec3& x, const LVec3& y) {
  return x.x1 * y.x1 + x.x2 * y.x2 - x.x3 * y.x3;
}

/// Causal character of x; the zero vector counts as spacelike.
CausalClass causal_class(const LVec3& x);

/// sqrt|<x,x>|, and exactly zero for vectors classified lightlike.
double lnorm(const LVec3& x);

/// Lorentzian cross product: (x2y3-x3y2, x3y1-x1y3, x2y1-x1y2).
constexpr LVec3 lcross(const LVec3& x, const LVec3& y) {
  return {x.x2 * y.x3 - x.x3 * y.x2, x.x3 * y.x1 - x.x1 * y.x3, x.x2 * y.x1 - x.x1 * y.x2};
}

/// Ordinary 3x3 determinant with x, y, z as rows, by cofactor expansion
/// along the first row.
constexpr double det3(const LVec3& x, const LVec3& y, const LVec3& z) {
  return x.x1 * (y.x2 * z.x3 - y.x3 * z.x2) - x.x2 * (y.x1 * z.x3 - y.x3 * z.x1) +
         x.x3 * (y.x1 * z.x2 - y.x2 * z.x1);
}

enum class AngleCase {
  SpacelikePairSpacelikePlane,  // cos
  SpacelikePairTimelikePlane,   // cosh
  TimelikePair,                 // cosh
  SpacelikeTimelike,            // sinh
};

const char* to_string(AngleCase c) noexcept;

struct AngleResult {
  double value = 0.0;
  AngleCase kind = AngleCase::SpacelikePairSpacelikePlane;
};

/// Lorentzian angle between two non-null vectors. The relation
/// |<x,y>| = |x||y| * {cos, cosh, cosh, sinh}(phi) is taken as an equality.
/// Throws LightlikeInput for null or zero arguments and DegeneratePlane when
/// two spacelike vectors span a lightlike plane.
AngleResult lorentz_angle(const LVec3& x, const LVec3& y);

enum class Sphere { H2, S12 };

/// |<x,x> + 1| <= tol for H2, |<x,x> - 1| <= tol for S12.
bool on_sphere(const LVec3& x, Sphere which, double tol = kSphereTol);

}  // namespace lgeom
