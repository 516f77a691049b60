#include "lgeom/registry.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>

#include "lgeom/error.hpp"
#include "lgeom/taylor.hpp"

namespace lgeom {

namespace {

constexpr double kRegistryHalfWidth = 4.0;
constexpr double kWarpedHalfWidth = 0.6;
constexpr double kWarpedMargin = 0.15;

double parse_real(std::string_view text, std::string_view key) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(value)) {
    throw SpecError("bad value for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

std::map<std::string, double> parse_args(std::string_view args) {
  std::map<std::string, double> out;
  while (!args.empty()) {
    const auto comma = args.find(',');
    const std::string_view item = args.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw SpecError("expected key=value, got '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    if (out.count(key) != 0) throw SpecError("duplicate key '" + key + "'");
    out[key] = parse_real(item.substr(eq + 1), key);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
    if (args.empty()) throw SpecError("trailing comma in curve spec");
  }
  return out;
}

double take(std::map<std::string, double>& args, const std::string& key, bool required,
            double fallback) {
  const auto it = args.find(key);
  if (it == args.end()) {
    if (required) throw SpecError("missing parameter '" + key + "'");
    return fallback;
  }
  const double v = it->second;
  args.erase(it);
  return v;
}

void reject_extras(const std::map<std::string, double>& args) {
  if (!args.empty()) throw SpecError("unknown parameter '" + args.begin()->first + "'");
}

std::string format_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double warped_margin(double lambda, double mu, double t) {
  const double ch = std::cosh(lambda * t);
  const double dpsi = 1.0 + 2.0 * mu * t;
  return lambda * lambda * (1.0 - kWarpedMargin) - ch * ch * dpsi * dpsi;
}

// Walks outward from 0 until the margin turns negative, then bisects.
double warped_extent(double lambda, double mu, double direction) {
  constexpr int steps = 600;
  const double dt = kWarpedHalfWidth / steps;
  double inside = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const double t = direction * dt * i;
    if (warped_margin(lambda, mu, t) < 0.0) {
      double lo = inside;
      double hi = t;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (warped_margin(lambda, mu, mid) >= 0.0 ? lo : hi) = mid;
      }
      return lo;
    }
    inside = t;
  }
  return direction * kWarpedHalfWidth;
}

}  // namespace

SphericalCurve geodesic_hyperbola() {
  auto eval = [](double v, int order) {
    Jet j;
    const double c = std::cosh(v);
    const double s = std::sinh(v);
    for (int k = 0; k <= order; ++k) {
      const bool even = k % 2 == 0;
      j.d[static_cast<std::size_t>(k)] = {even ? c : s, 0.0, even ? s : c};
    }
    return j;
  };
  return SphericalCurve(
      ParamCurve::analytic({-kRegistryHalfWidth, kRegistryHalfWidth}, eval), true,
      "paper-geodesic");
}

SphericalCurve pseudo_circle(double k) {
  if (!(std::abs(k) < 1.0)) fail(ErrorKind::InvalidArgument, "pseudo-circle needs |k| < 1");
  const double m = std::sqrt(1.0 - k * k);
  auto eval = [k, m](double v, int order) {
    Jet j;
    const double c = std::cosh(v / m);
    const double s = std::sinh(v / m);
    double scale = m;
    for (int n = 0; n <= order; ++n) {
      const bool even = n % 2 == 0;
      j.d[static_cast<std::size_t>(n)] = {scale * (even ? c : s), n == 0 ? k : 0.0,
                                           scale * (even ? s : c)};
      scale /= m;
    }
    return j;
  };
  return SphericalCurve(
      ParamCurve::analytic({-kRegistryHalfWidth, kRegistryHalfWidth}, eval), true,
      "pseudo-circle:k=" + format_param(k));
}

SphericalCurve warped_raw(double lambda, double mu) {
  if (!std::isfinite(lambda) || !std::isfinite(mu)) {
    fail(ErrorKind::NonFinite, "warped curve parameters must be finite");
  }
  if (warped_margin(lambda, mu, 0.0) < 0.0) {
    fail(ErrorKind::InvalidArgument, "warped curve is not safely timelike at t = 0");
  }
  const Interval dom{warped_extent(lambda, mu, -1.0), warped_extent(lambda, mu, 1.0)};
  auto eval = [lambda, mu](double t, int order) {
    const auto n = static_cast<std::size_t>(order);
    const Series x = Series::variable(t, n);
    Series sh, ch, sn, cs;
    sinh_cosh(x * lambda, sh, ch);
    sin_cos(x + mu * (x * x), sn, cs);
    const SeriesVec f{ch * cs, ch * sn, sh};
    Jet j;
    for (std::size_t k = 0; k <= n; ++k) j.d[k] = f.derivative(k);
    return j;
  };
  std::string name = "warped:lambda=" + format_param(lambda);
  if (mu != 0.0) name += ",mu=" + format_param(mu);
  return SphericalCurve(ParamCurve::analytic(dom, eval), false, std::move(name));
}

SphericalCurve warped(double lambda, double mu) {
  return to_unit_speed(warped_raw(lambda, mu), 0.0);
}

ParamCurve timelike_helix() {
  auto eval = [](double t, int order) {
    Jet j;
    const double c = std::cos(t);
    const double s = std::sin(t);
    const LVec3 cycle[4] = {{c, s, 0.0}, {-s, c, 0.0}, {-c, -s, 0.0}, {s, -c, 0.0}};
    for (int k = 0; k <= order; ++k) j.d[static_cast<std::size_t>(k)] = cycle[k % 4];
    j.d[0].x3 = 2.0 * t;
    if (order >= 1) j.d[1].x3 = 2.0;
    return j;
  };
  return ParamCurve::analytic({-2.0 * std::numbers::pi, 2.0 * std::numbers::pi}, eval);
}

ParamCurve twisted_cubic() {
  auto eval = [](double t, int order) {
    Jet j;
    j.d[0] = {t, t * t, t * t * t / 10.0};
    if (order >= 1) j.d[1] = {1.0, 2.0 * t, 0.3 * t * t};
    if (order >= 2) j.d[2] = {0.0, 2.0, 0.6 * t};
    if (order >= 3) j.d[3] = {0.0, 0.0, 0.6};
    return j;
  };
  return ParamCurve::analytic({-1.0, 1.0}, eval);
}

SphericalCurve make_curve(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::map<std::string, double> args;
  if (colon != std::string_view::npos) args = parse_args(spec.substr(colon + 1));

  if (name == "paper-geodesic") {
    reject_extras(args);
    return geodesic_hyperbola();
  }
  if (name == "pseudo-circle") {
    const double k = take(args, "k", true, 0.0);
    reject_extras(args);
    return pseudo_circle(k);
  }
  if (name == "warped") {
    const double lambda = take(args, "lambda", true, 0.0);
    const double mu = take(args, "mu", false, 0.0);
    reject_extras(args);
    return warped(lambda, mu);
  }
  throw SpecError("unknown curve '" + std::string(name) + "'");
}

std::vector<std::string> standard_curve_specs() {
  return {"paper-geodesic", "pseudo-circle:k=0.6", "warped:lambda=2"};
}

}  // namespace lgeom
