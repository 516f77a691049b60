#pragma once

// Timelike curves on the de Sitter 2-space S12 = {<x,x> = 1}: unit-speed
// reparametrization, the Lorentzian Sabban frame {f, t, s} with geodesic
// curvature kg, the pseudo-spherical evolute, the spacelike height function
// and pseudo-circle contact.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lgeom/curves.hpp"

namespace lgeom {

inline constexpr double kUnitSpeedTol = 1e-6;
/// Absolute threshold below which a derivative counts as vanishing.
inline constexpr double kVanishTol = 1e-7;
inline constexpr int kMaxContactOrder = 4;

/// A curve lying on S12. Construction validates membership (and unit speed
/// when claimed) on an interior grid of the domain.
class SphericalCurve {
 public:
  SphericalCurve(ParamCurve base, bool unit_speed, std::string name = {});

  const ParamCurve& base() const { return base_; }
  bool unit_speed() const { return unit_speed_; }
  const std::string& name() const { return name_; }
  const Interval& domain() const { return base_.domain(); }

  Jet jet_at(double v, int order) const { return base_.jet_at(v, order); }
  LVec3 point(double v) const { return base_.point(v); }

 private:
  ParamCurve base_;
  bool unit_speed_;
  std::string name_;
};

/// Cumulative arc length of a timelike curve, tabulated on uniform panels and
/// inverted by safeguarded Newton iteration inside the bracketing panel.
/// Arc length is signed and measured from `anchor`.
class ArcLengthMap {
 public:
  ArcLengthMap(ParamCurve curve, double anchor, int panels = 512);

  /// Signed arc length from the anchor to t.
  double length_at(double t) const;
  /// Parameter t with length_at(t) == v. Throws OutOfRange.
  double param_at(double v) const;
  Interval length_range() const { return {cum_.front() - offset_, cum_.back() - offset_}; }

 private:
  double speed(double t) const;
  double partial(std::size_t panel, double t) const;

  ParamCurve curve_;
  std::vector<double> nodes_;
  std::vector<double> cum_;
  double offset_ = 0.0;
};

/// Parameter t whose arc length from the start of the domain equals v, found
/// by monotone root finding on the cumulative quadrature. Throws NotTimelike
/// and OutOfRange.
double unit_speed_reparam(const SphericalCurve& curve, double v);

/// The same curve parametrized by signed arc length from `anchor`, with exact
/// jets obtained by composing Taylor series (the base must supply order-4
/// jets). Returns the input when it is already unit speed.
SphericalCurve to_unit_speed(const SphericalCurve& curve, double anchor);

struct SabbanData {
  double v = 0.0;
  LVec3 f, t, s;
  double kg = 0.0;   // det(f, t, t')
  double kg1 = 0.0;  // d kg / dv
  double kg2 = 0.0;  // d^2 kg / dv^2
};

/// Sabban frame at v: t = f', s = f x t, so that
///   f' = t,  t' = f + kg s,  s' = kg t.
/// kg1 and kg2 come from the jets when the source has order 4, otherwise kg2
/// is a central difference of kg1. Throws NotUnitSpeed and NotOnSphere.
SabbanData sabban_frame(const SphericalCurve& curve, double v);

/// (kg f - s) / sqrt(kg^2 + 1); always a point of S12.
LVec3 pseudo_evolute(const SabbanData& sd);

/// Derivative of +/- the evolute, sign * kg' (f + kg s) / (kg^2 + 1)^(3/2).
LVec3 evolute_velocity(const SphericalCurve& curve, double v, int sign);

/// Derivative of order 0..4 of h(v) = <f(v), u> for u on S12, from the frame
/// identities rather than differencing. Throws NotOnSphere.
double height(const SphericalCurve& curve, double v, const LVec3& u, int order);
double height(const SabbanData& sd, const LVec3& u, int order);

struct Stationarity {
  /// Largest k <= 4 with derivatives 1..k of the height function vanishing.
  int order = 0;
  /// +1 or -1 when u = +/- evolute(v) within 1e-6, otherwise 0.
  int evolute_sign = 0;
  /// Whether `order` agrees with the geometric characterization (u in
  /// span{f, s}; u = +/- evolute; kg' = 0; kg'' = 0).
  bool consistent = false;
};

Stationarity stationarity_class(const SphericalCurve& curve, double v, const LVec3& u);

/// Level set {x in S12 : <x, center> = level}.
struct PseudoCircle {
  LVec3 center;
  double level = 0.0;

  PseudoCircle(const LVec3& c, double r);
};

/// Center evolute(v0), level kg / sqrt(kg^2 + 1).
PseudoCircle osculating_circle(const SphericalCurve& curve, double v0);

/// k-point contact: largest k <= max_order such that g = <f, center> - level
/// and its first k-1 derivatives vanish at v0.
int contact_order(const SphericalCurve& curve, const PseudoCircle& circle, double v0,
                  int max_order = kMaxContactOrder);

struct EvoluteSample {
  double v = 0.0;
  LVec3 point;
  double kg = 0.0;
};

/// Pseudo-spherical evolute and geodesic curvature at every grid point.
std::vector<EvoluteSample> sample_evolute(const SphericalCurve& curve,
                                          std::span<const double> grid,
                                          Exec exec = Exec::Parallel);

}  // namespace lgeom
