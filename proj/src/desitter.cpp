#include "lgeom/desitter.hpp"

#include <algorithm>
#include <cmath>

#include "lgeom/error.hpp"
#include "lgeom/numerics.hpp"
#include "lgeom/taylor.hpp"

namespace lgeom {

namespace {

constexpr int kValidationPoints = 33;
constexpr double kEvoluteMatchTol = 1e-6;

}  // namespace

SphericalCurve::SphericalCurve(ParamCurve base, bool unit_speed, std::string name)
    : base_(std::move(base)), unit_speed_(unit_speed), name_(std::move(name)) {
  const Interval dom = base_.domain();
  const double margin = 0.05 * dom.length();
  for (double v : num::linspace(dom.lo + margin, dom.hi - margin, kValidationPoints)) {
    const Jet j = base_.jet_at(v, 1);
    if (!on_sphere(j.d[0], Sphere::S12)) {
      fail(ErrorKind::NotOnSphere, "curve leaves S12 at parameter " + std::to_string(v));
    }
    const double q = minkowski_inner(j.d[1], j.d[1]);
    if (!(q < 0.0) || causal_class(j.d[1]) != CausalClass::Timelike) {
      fail(ErrorKind::NotTimelike, "curve is not timelike at parameter " + std::to_string(v));
    }
    if (unit_speed_ && std::abs(q + 1.0) > kUnitSpeedTol) {
      fail(ErrorKind::NotUnitSpeed, "curve is not unit speed at parameter " + std::to_string(v));
    }
  }
}

// ---------------------------------------------------------------------------
// Arc length

ArcLengthMap::ArcLengthMap(ParamCurve curve, double anchor, int panels)
    : curve_(std::move(curve)) {
  if (panels < 1) fail(ErrorKind::InvalidArgument, "arc-length map needs >= 1 panel");
  const Interval dom = curve_.domain();
  if (!dom.contains(anchor)) fail(ErrorKind::OutOfDomain, "anchor outside curve domain");
  nodes_ = num::linspace(dom.lo, dom.hi, static_cast<std::size_t>(panels) + 1);
  cum_.assign(nodes_.size(), 0.0);
  for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
    cum_[k + 1] = cum_[k] + partial(k, nodes_[k + 1]);
  }
  offset_ = 0.0;
  offset_ = length_at(anchor);
}

double ArcLengthMap::speed(double t) const {
  const LVec3 v = curve_.jet_at(t, 1).d[1];
  const double q = minkowski_inner(v, v);
  if (!(q < 0.0) || causal_class(v) != CausalClass::Timelike) {
    fail(ErrorKind::NotTimelike, "velocity not timelike at t=" + std::to_string(t));
  }
  return std::sqrt(-q);
}

double ArcLengthMap::partial(std::size_t panel, double t) const {
  auto f = [this](double x) { return speed(x); };
  double left = nodes_[panel];
  double total = 0.0;
  for (double br : curve_.breakpoints(left, t)) {
    total += num::gauss_legendre8(f, left, br);
    left = br;
  }
  return total + num::gauss_legendre8(f, left, t);
}

double ArcLengthMap::length_at(double t) const {
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  std::size_t k = it == nodes_.begin() ? 0 : static_cast<std::size_t>(it - nodes_.begin()) - 1;
  k = std::min(k, nodes_.size() - 2);
  return cum_[k] + partial(k, t) - offset_;
}

double ArcLengthMap::param_at(double v) const {
  const double w = v + offset_;
  const double total = cum_.back();
  const double slack = 1e-12 * std::max(1.0, total);
  if (!(w >= -slack && w <= total + slack)) {
    fail(ErrorKind::OutOfRange, "arc length " + std::to_string(v) + " outside the curve");
  }
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), w);
  std::size_t k = it == cum_.begin() ? 0 : static_cast<std::size_t>(it - cum_.begin()) - 1;
  k = std::min(k, nodes_.size() - 2);

  double lo = nodes_[k];
  double hi = nodes_[k + 1];
  const double span = cum_[k + 1] - cum_[k];
  double t = lo + (hi - lo) * std::clamp((w - cum_[k]) / span, 0.0, 1.0);
  for (int iter = 0; iter < 60; ++iter) {
    const double g = cum_[k] + partial(k, t) - w;
    if (std::abs(g) <= 1e-14 * std::max(1.0, std::abs(w))) break;
    if (g > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    double next = t - g / speed(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-16 * std::max(1.0, std::abs(t))) break;
    t = next;
  }
  return t;
}

double unit_speed_reparam(const SphericalCurve& curve, double v) {
  const ArcLengthMap map(curve.base(), curve.domain().lo, 64);
  return map.param_at(v);
}

SphericalCurve to_unit_speed(const SphericalCurve& curve, double anchor) {
  if (curve.unit_speed()) return curve;
  const ParamCurve& base = curve.base();
  if (base.max_order() < ParamCurve::kMaxJetOrder) {
    fail(ErrorKind::OrderUnavailable, "unit-speed reparametrization needs order-4 jets");
  }
  auto map = std::make_shared<const ArcLengthMap>(base, anchor);
  const Interval vdom = map->length_range();
  const Interval tdom = base.domain();

  auto eval = [map, base, tdom](double v, int order) {
    const double t = std::clamp(map->param_at(v), tdom.lo, tdom.hi);
    const Jet bj = base.jet_at(t, ParamCurve::kMaxJetOrder);
    constexpr std::size_t n = ParamCurve::kMaxJetOrder;

    // Taylor series of the base about t, then dt/dv = 1/|f_t| solved by
    // Picard iteration in series form, then composition.
    SeriesVec fs{Series(n), Series(n), Series(n)};
    double fact = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 1) fact *= static_cast<double>(k);
      fs.x1[k] = bj.d[k].x1 / fact;
      fs.x2[k] = bj.d[k].x2 / fact;
      fs.x3[k] = bj.d[k].x3 / fact;
    }
    const SeriesVec ft = fs.derivative();
    const Series inv_speed = pow(minkowski_inner(ft, ft) * -1.0, -0.5);
    Series delta(n);
    for (std::size_t it = 0; it <= n; ++it) delta = compose(inv_speed, delta).integral().truncated(n);
    const SeriesVec fv = compose(fs, delta);

    Jet j;
    for (int k = 0; k <= order; ++k) j.d[static_cast<std::size_t>(k)] = fv.derivative(static_cast<std::size_t>(k));
    return j;
  };
  std::string name = curve.name().empty() ? std::string("unit-speed") : curve.name();
  return SphericalCurve(ParamCurve::analytic(vdom, std::move(eval)), true, std::move(name));
}

// ---------------------------------------------------------------------------
// Sabban frame and evolute

SabbanData sabban_frame(const SphericalCurve& curve, double v) {
  if (!curve.unit_speed()) {
    fail(ErrorKind::NotUnitSpeed, "Sabban frame needs a unit-speed parametrization");
  }
  const bool full = curve.base().max_order() >= ParamCurve::kMaxJetOrder;
  const Jet j = curve.jet_at(v, full ? 4 : 3);
  SabbanData sd;
  sd.v = v;
  sd.f = j.d[0];
  sd.t = j.d[1];
  if (!on_sphere(sd.f, Sphere::S12)) fail(ErrorKind::NotOnSphere, "f(v) is not on S12");
  if (std::abs(minkowski_inner(sd.t, sd.t) + 1.0) > kUnitSpeedTol) {
    fail(ErrorKind::NotUnitSpeed, "<f', f'> differs from -1");
  }
  sd.s = lcross(sd.f, sd.t);
  sd.kg = det3(sd.f, sd.t, j.d[2]);
  sd.kg1 = det3(sd.f, sd.t, j.d[3]);
  if (full) {
    sd.kg2 = det3(sd.f, j.d[2], j.d[3]) + det3(sd.f, sd.t, j.d[4]);
  } else {
    const double h = curve.base().step() > 0.0 ? curve.base().step() : 1e-3;
    auto kg1_at = [&](double x) {
      const Jet jj = curve.jet_at(x, 3);
      return det3(jj.d[0], jj.d[1], jj.d[3]);
    };
    sd.kg2 = num::diff1_5pt(kg1_at, v, h);
  }
  return sd;
}

LVec3 pseudo_evolute(const SabbanData& sd) {
  return (sd.kg * sd.f - sd.s) / std::sqrt(sd.kg * sd.kg + 1.0);
}

LVec3 evolute_velocity(const SphericalCurve& curve, double v, int sign) {
  if (sign != 1 && sign != -1) fail(ErrorKind::InvalidArgument, "evolute sign must be +1 or -1");
  const SabbanData sd = sabban_frame(curve, v);
  const double w = sd.kg * sd.kg + 1.0;
  return (static_cast<double>(sign) * sd.kg1 / (w * std::sqrt(w))) * (sd.f + sd.kg * sd.s);
}

// ---------------------------------------------------------------------------
// Height function

double height(const SabbanData& sd, const LVec3& u, int order) {
  if (!on_sphere(u, Sphere::S12)) fail(ErrorKind::NotOnSphere, "probe point is not on S12");
  const double kg = sd.kg;
  const double kg1 = sd.kg1;
  switch (order) {
    case 0: return minkowski_inner(sd.f, u);
    case 1: return minkowski_inner(sd.t, u);
    case 2: return minkowski_inner(sd.f + kg * sd.s, u);
    case 3: return minkowski_inner((1.0 + kg * kg) * sd.t + kg1 * sd.s, u);
    case 4:
      return minkowski_inner((1.0 + kg * kg) * sd.f + (3.0 * kg * kg1) * sd.t +
                                 (kg + kg * kg * kg + sd.kg2) * sd.s,
                             u);
    default: fail(ErrorKind::InvalidArgument, "height derivative order must be in 0..4");
  }
}

double height(const SphericalCurve& curve, double v, const LVec3& u, int order) {
  if (!on_sphere(u, Sphere::S12)) fail(ErrorKind::NotOnSphere, "probe point is not on S12");
  return height(sabban_frame(curve, v), u, order);
}

Stationarity stationarity_class(const SphericalCurve& curve, double v, const LVec3& u) {
  const SabbanData sd = sabban_frame(curve, v);
  Stationarity out;
  for (int k = 1; k <= 4; ++k) {
    if (std::abs(height(sd, u, k)) > kVanishTol) break;
    out.order = k;
  }

  const LVec3 ev = pseudo_evolute(sd);
  if (max_abs_diff(u, ev) <= kEvoluteMatchTol) {
    out.evolute_sign = 1;
  } else if (max_abs_diff(u, -ev) <= kEvoluteMatchTol) {
    out.evolute_sign = -1;
  }

  const LVec3 off_span = u - minkowski_inner(u, sd.f) * sd.f - minkowski_inner(u, sd.s) * sd.s;
  const double norm = std::sqrt(sd.kg * sd.kg + 1.0);
  int geometric = 0;
  if (max_abs(off_span) <= kEvoluteMatchTol) {
    geometric = 1;
    if (out.evolute_sign != 0) {
      geometric = 2;
      if (std::abs(sd.kg1) / norm <= kVanishTol) {
        geometric = 3;
        if (std::abs(sd.kg2) / norm <= kVanishTol) geometric = 4;
      }
    }
  }
  out.consistent = geometric == out.order;
  return out;
}

// ---------------------------------------------------------------------------
// Pseudo-circles

PseudoCircle::PseudoCircle(const LVec3& c, double r) : center(c), level(r) {
  if (!on_sphere(center, Sphere::S12)) fail(ErrorKind::NotOnSphere, "pseudo-circle center not on S12");
  if (!std::isfinite(level)) fail(ErrorKind::NonFinite, "pseudo-circle level is not finite");
}

PseudoCircle osculating_circle(const SphericalCurve& curve, double v0) {
  const SabbanData sd = sabban_frame(curve, v0);
  return PseudoCircle(pseudo_evolute(sd), sd.kg / std::sqrt(sd.kg * sd.kg + 1.0));
}

int contact_order(const SphericalCurve& curve, const PseudoCircle& circle, double v0,
                  int max_order) {
  if (max_order < 1 || max_order > kMaxContactOrder) {
    fail(ErrorKind::InvalidArgument, "contact order is capped at 4");
  }
  const SabbanData sd = sabban_frame(curve, v0);
  int k = 0;
  while (k < max_order) {
    const double g = k == 0 ? minkowski_inner(sd.f, circle.center) - circle.level
                            : height(sd, circle.center, k);
    if (std::abs(g) > kVanishTol) break;
    ++k;
  }
  return k;
}

std::vector<EvoluteSample> sample_evolute(const SphericalCurve& curve,
                                          std::span<const double> grid, Exec exec) {
  std::vector<EvoluteSample> out(grid.size());
  for_each_index(exec, grid.size(), [&](std::size_t i) {
    const SabbanData sd = sabban_frame(curve, grid[i]);
    out[i] = {grid[i], pseudo_evolute(sd), sd.kg};
  });
  return out;
}

}  // namespace lgeom
