#include "lgeom/bertrand.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lgeom/error.hpp"
#include "lgeom/numerics.hpp"

namespace lgeom {

namespace {

constexpr double kCosXiFloor = 1e-9;
constexpr double kVelocityStep = 1e-2;
constexpr double kCurvatureStep = 1e-4;
constexpr double kConstKgTol = 1e-6;
constexpr double kCellTol = 1e-13;

void require_unit_speed(const SphericalCurve& f) {
  if (!f.unit_speed()) {
    fail(ErrorKind::NotUnitSpeed, "generator must be parametrized by arc length");
  }
}

// Derivatives 1..order of gamma, using
//   gamma'    = a (f + tan(xi) f x f')
//   gamma''   = a (f' + tan(xi) f x f'')
//   gamma'''  = a (f'' + tan(xi) (f' x f'' + f x f'''))
//   gamma'''' = a (f''' + tan(xi) (2 f' x f''' + f x f'''')).
// The point slot is left at zero.
Jet bertrand_jet(const SlopeParams& sp, const SphericalCurve& f, double v, int order) {
  const Jet fj = f.jet_at(v, order);
  const double tx = std::tan(sp.xi);
  const auto& d = fj.d;
  Jet g;
  g.t = v;
  g.order = order;
  if (order >= 1) g.d[1] = sp.a * (d[0] + tx * lcross(d[0], d[1]));
  if (order >= 2) g.d[2] = sp.a * (d[1] + tx * lcross(d[0], d[2]));
  if (order >= 3) g.d[3] = sp.a * (d[2] + tx * (lcross(d[1], d[2]) + lcross(d[0], d[3])));
  if (order >= 4) {
    g.d[4] = sp.a * (d[3] + tx * (2.0 * lcross(d[1], d[3]) + lcross(d[0], d[4])));
  }
  return g;
}

LVec3 bertrand_velocity(const SlopeParams& sp, const SphericalCurve& f, double v) {
  const Jet fj = f.jet_at(v, 1);
  return sp.a * (fj.d[0] + std::tan(sp.xi) * lcross(fj.d[0], fj.d[1]));
}

void check_cos_xi(double xi) {
  if (!(std::abs(std::cos(xi)) > kCosXiFloor)) {
    fail(ErrorKind::InvalidArgument, "cos(xi) vanishes");
  }
}

std::vector<double> checked_grid(std::span<const double> grid, std::size_t min_size) {
  if (grid.size() < min_size) {
    fail(ErrorKind::InvalidArgument, "grid needs at least " + std::to_string(min_size) + " points");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) fail(ErrorKind::NonFinite, "non-finite grid point");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      fail(ErrorKind::InvalidRange, "grid must be strictly increasing");
    }
  }
  return {grid.begin(), grid.end()};
}

}  // namespace

SlopeParams SlopeParams::from_angle(double theta, double u) {
  if (!(theta > 0.0 && theta <= std::numbers::pi / 2)) {
    fail(ErrorKind::InvalidArgument, "theta must lie in (0, pi/2]");
  }
  if (!(u > 0.0) || !std::isfinite(u)) fail(ErrorKind::InvalidArgument, "u must be positive");
  SlopeParams sp;
  sp.theta = theta;
  sp.u = u;
  sp.has_angle = true;
  sp.xi = theta == std::numbers::pi / 2 ? 0.0 : std::log(u) / std::tan(theta);
  check_cos_xi(sp.xi);
  sp.a = u * std::sin(theta) * std::cos(sp.xi);
  return sp;
}

SlopeParams SlopeParams::from_bertrand(double a, double xi) {
  if (!std::isfinite(a) || !std::isfinite(xi)) fail(ErrorKind::NonFinite, "a and xi must be finite");
  if (a == 0.0) fail(ErrorKind::InvalidArgument, "a must be non-zero");
  check_cos_xi(xi);
  SlopeParams sp;
  sp.a = a;
  sp.xi = xi;
  return sp;
}

double SlopeParams::radius() const {
  return has_angle ? u * std::sin(theta) : a / std::cos(xi);
}

SlopeParams resolve_angle(const SlopeParams& sp) {
  if (sp.has_angle) return sp;
  const double c = std::cos(sp.xi);
  if (!(sp.a * c > 0.0)) {
    fail(ErrorKind::NoCompatibleAngle, "a cos(xi) must be positive for a surface angle");
  }
  constexpr double half_pi = std::numbers::pi / 2;
  if (sp.xi == 0.0) {
    if (sp.a > 1.0) fail(ErrorKind::NoCompatibleAngle, "no angle with sin(theta) = a");
    return SlopeParams::from_angle(std::asin(sp.a), 1.0);
  }
  // Log form of exp(xi tan(theta)) sin(theta) cos(xi) = a.
  const double target = std::log(sp.a / c);
  auto g = [&](double th) { return sp.xi * std::tan(th) + std::log(std::sin(th)) - target; };
  constexpr int cells = 4096;
  const double lo = 1e-9;
  const double hi = half_pi - 1e-9;
  double prev_t = lo;
  double prev_g = g(lo);
  for (int i = 1; i <= cells; ++i) {
    const double t = lo + (hi - lo) * i / cells;
    const double gt = g(t);
    if (prev_g == 0.0 || prev_g * gt < 0.0 || gt == 0.0) {
      const double theta = num::bisect(g, prev_t, t);
      return SlopeParams::from_angle(theta, std::exp(sp.xi * std::tan(theta)));
    }
    prev_t = t;
    prev_g = gt;
  }
  fail(ErrorKind::NoCompatibleAngle, "no theta in (0, pi/2] reproduces (a, xi)");
}

LVec3 slope_surface_point(const SlopeParams& sp, const SphericalCurve& f, double v) {
  require_unit_speed(f);
  const Jet fj = f.jet_at(v, 1);
  return sp.radius() * (std::cos(sp.xi) * fj.d[0] + std::sin(sp.xi) * lcross(fj.d[0], fj.d[1]));
}

LVec3 synthesize_bertrand(const SlopeParams& sp, const SphericalCurve& f, double v) {
  require_unit_speed(f);
  const LVec3 pos = integrate_along(f.base(), [&](double x) { return f.point(x); }, 0.0, v);
  const LVec3 rot = integrate_along(
      f.base(),
      [&](double x) {
        const Jet j = f.jet_at(x, 1);
        return lcross(j.d[0], j.d[1]);
      },
      0.0, v);
  return sp.a * pos + (sp.a * std::tan(sp.xi)) * rot;
}

ParamCurve bertrand_curve(const SlopeParams& sp, const SphericalCurve& f, int panels) {
  require_unit_speed(f);
  const Interval dom = f.domain();
  if (!dom.contains(0.0)) fail(ErrorKind::OutOfDomain, "generator domain must contain 0");
  if (panels < 1) fail(ErrorKind::InvalidArgument, "need at least one panel");

  struct Table {
    std::vector<double> nodes;
    std::vector<LVec3> cum;
  };
  auto table = std::make_shared<Table>();
  table->nodes = num::linspace(dom.lo, dom.hi, static_cast<std::size_t>(panels) + 1);
  table->cum.assign(table->nodes.size(), LVec3{});

  auto integrate = [sp, f](double a, double b) {
    return integrate_along(
        f.base(), [&](double x) { return bertrand_velocity(sp, f, x); }, a, b, 1e-13);
  };
  std::vector<LVec3> pieces(static_cast<std::size_t>(panels));
  for_each_index(Exec::Parallel, pieces.size(), [&](std::size_t k) {
    pieces[k] = integrate(table->nodes[k], table->nodes[k + 1]);
  });
  for (std::size_t k = 0; k < pieces.size(); ++k) table->cum[k + 1] = table->cum[k] + pieces[k];

  auto locate = [table](double v) {
    const auto& nodes = table->nodes;
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), v);
    std::size_t k = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    return std::min(k, nodes.size() - 2);
  };
  const std::size_t k0 = locate(0.0);
  const LVec3 origin = table->cum[k0] + integrate(table->nodes[k0], 0.0);

  auto eval = [sp, f, table, locate, integrate, origin](double v, int order) {
    Jet j = bertrand_jet(sp, f, v, order);
    const std::size_t k = locate(v);
    j.d[0] = table->cum[k] + integrate(table->nodes[k], v) - origin;
    return j;
  };
  return ParamCurve::analytic(dom, std::move(eval), f.base().max_order());
}

BertrandCurvatures bertrand_curvatures(const SlopeParams& sp, const SphericalCurve& f, double v) {
  const SabbanData sd = sabban_frame(f, v);
  const double c = std::cos(sp.xi);
  const double tx = std::tan(sp.xi);
  const double raw = c * c * (1.0 + tx * sd.kg) / sp.a;
  BertrandCurvatures out;
  out.eps = c / sp.a > 0.0 ? 1 : -1;
  if (out.eps * raw < 0.0) {
    fail(ErrorKind::SignConflict, "the sign making kappa non-negative contradicts eps cos(xi)/a > 0"
                                  " at v=" + std::to_string(v));
  }
  out.kappa = out.eps * raw;
  out.tau = c * c * (sd.kg - tx) / sp.a;
  return out;
}

FrenetData bertrand_frames(const SlopeParams& sp, const SphericalCurve& f, double v) {
  const BertrandCurvatures bc = bertrand_curvatures(sp, f, v);
  const SabbanData sd = sabban_frame(f, v);
  const double tx = std::tan(sp.xi);
  const double eps = bc.eps;
  const double dv_ds = eps * std::cos(sp.xi) / sp.a;
  FrenetData fd;
  fd.t = v;
  fd.T = (sp.a * dv_ds) * (sd.f + tx * sd.s);
  fd.N = eps * sd.t;
  fd.B = (eps * sp.a * dv_ds) * (sd.s - tx * sd.f);
  fd.kappa = bc.kappa;
  fd.tau = bc.tau;
  fd.speed = 1.0 / dv_ds;
  fd.kind = FrenetCase::SpacelikeTimelikeNormal;
  return fd;
}

DarbouxMatch darboux_equals_evolute(const SlopeParams& sp, const SphericalCurve& f, double v) {
  const FrenetData fd = frenet_from_jet(bertrand_jet(sp, f, v, 3));
  const LVec3 c = darboux_indicatrix(fd);
  const LVec3 d = pseudo_evolute(sabban_frame(f, v));
  const double plus = max_abs_diff(c, d);
  const double minus = max_abs_diff(c, -d);
  return plus <= minus ? DarbouxMatch{plus, 1} : DarbouxMatch{minus, -1};
}

SphericalCurve inverse_spherical(const ParamCurve& curve, double xi, std::span<const double> grid) {
  const auto g = checked_grid(grid, 6);
  check_cos_xi(xi);
  const auto frames = frenet_sweep(curve, g);
  if (!bertrand_fit(frames).is_bertrand) {
    fail(ErrorKind::NotBertrand, "curvature and torsion admit no linear relation A k + B t = 1");
  }
  for (const auto& fd : frames) {
    if (fd.kind != FrenetCase::SpacelikeTimelikeNormal) {
      fail(ErrorKind::WrongCausalCase, "expected a spacelike curve with timelike normal, got " +
                                           std::string(to_string(fd.kind)));
    }
  }

  // With xi fixed the relation is a (kappa - tan(xi) tau) = 1.
  const double tx = std::tan(xi);
  double sw = 0.0;
  double sww = 0.0;
  for (const auto& fd : frames) {
    const double w = fd.kappa - tx * fd.tau;
    sw += w;
    sww += w * w;
  }
  if (!(sww > 0.0)) fail(ErrorKind::NotBertrand, "degenerate Bertrand relation");
  const double a = sw / sww;
  const double c = std::cos(xi);
  const double s = std::sin(xi);
  const double eps = c / a > 0.0 ? 1.0 : -1.0;

  std::vector<LVec3> pts(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) pts[i] = eps * (c * frames[i].T - s * frames[i].B);

  // Arc length of the generator: dnu/ds = |cos(xi) / a|.
  const double rate = std::abs(c / a);
  const double ref = (g.front() <= 0.0 && 0.0 <= g.back()) ? 0.0 : g.front();
  std::vector<double> nu(g.size());
  nu[0] = -rate * arc_length(curve, g.front(), ref);
  std::vector<double> cell(g.size() - 1);
  for_each_index(Exec::Parallel, cell.size(),
                 [&](std::size_t i) { cell[i] = rate * arc_length(curve, g[i], g[i + 1]); });
  for (std::size_t i = 1; i < g.size(); ++i) nu[i] = nu[i - 1] + cell[i - 1];

  const double h = (nu.back() - nu.front()) / static_cast<double>(g.size() - 1);
  bool uniform = true;
  for (double w : cell) uniform = uniform && std::abs(w - h) <= 1e-9 * h;
  ParamCurve base = uniform ? ParamCurve::sampled(nu.front(), h, std::move(pts))
                            : ParamCurve::resampled(nu, pts, g.size());
  return SphericalCurve(std::move(base), true, "inverse");
}

double surface_velocity_residual(const SlopeParams& sp, const SphericalCurve& f, std::span<const double> grid) {
  std::vector<double> res(grid.size());
  for_each_index(Exec::Parallel, grid.size(), [&](std::size_t i) {
    const double v = grid[i];
    const LVec3 d = num::diff1_5pt([&](double x) { return synthesize_bertrand(sp, f, x); }, v,
                                   kVelocityStep);
    res[i] = max_abs_diff(d, slope_surface_point(sp, f, v));
  });
  return res.empty() ? 0.0 : *std::max_element(res.begin(), res.end());
}

LVec3 integrate_surface_curve(const SlopeParams& sp, const SphericalCurve& f, double v) {
  require_unit_speed(f);
  return integrate_along(
      f.base(), [&](double x) { return slope_surface_point(sp, f, x); }, 0.0, v);
}

ParamCurve sample_surface_integral(const SlopeParams& sp, const SphericalCurve& f, double v0, double v1,
                        std::size_t n, Exec exec) {
  if (n < 6 || !(v1 > v0)) fail(ErrorKind::InvalidRange, "need v0 < v1 and at least 6 samples");
  const auto grid = num::linspace(v0, v1, n);
  std::vector<LVec3> cells(n - 1);
  for_each_index(exec, cells.size(), [&](std::size_t i) {
    cells[i] = integrate_along(
        f.base(), [&](double x) { return slope_surface_point(sp, f, x); }, grid[i], grid[i + 1],
        kCellTol);
  });
  std::vector<LVec3> pts(n);
  pts[0] = integrate_surface_curve(sp, f, v0);
  for (std::size_t i = 1; i < n; ++i) pts[i] = pts[i - 1] + cells[i - 1];
  return ParamCurve::sampled(v0, (v1 - v0) / static_cast<double>(n - 1), std::move(pts));
}

std::vector<LVec3> sample_synthesized(const SlopeParams& sp, const SphericalCurve& f,
                                      std::span<const double> grid, Exec exec) {
  std::vector<LVec3> out(grid.size());
  for_each_index(exec, grid.size(),
                 [&](std::size_t i) { out[i] = synthesize_bertrand(sp, f, grid[i]); });
  return out;
}

std::vector<LVec3> sample_bertrand(const ParamCurve& curve, std::span<const double> grid,
                                   Exec exec) {
  std::vector<LVec3> out(grid.size());
  for_each_index(exec, grid.size(), [&](std::size_t i) { out[i] = curve.point(grid[i]); });
  return out;
}

SurfacePatch surface_mesh(double theta, const SphericalCurve& f, Interval u_range,
                          Interval v_range, std::size_t nu, std::size_t nv, Exec exec) {
  if (nu < 2 || nv < 2) fail(ErrorKind::InvalidRange, "surface grid needs at least 2x2 vertices");
  if (!(u_range.lo > 0.0) || !(u_range.hi > u_range.lo) || !std::isfinite(u_range.hi)) {
    fail(ErrorKind::InvalidRange, "u range must be a non-empty subinterval of (0, inf)");
  }
  if (!(v_range.hi > v_range.lo) || !std::isfinite(v_range.lo) || !std::isfinite(v_range.hi)) {
    fail(ErrorKind::InvalidRange, "v range must be non-empty");
  }
  require_unit_speed(f);
  SurfacePatch patch;
  patch.nu = nu;
  patch.nv = nv;
  patch.us = num::linspace(u_range.lo, u_range.hi, nu);
  patch.vs = num::linspace(v_range.lo, v_range.hi, nv);
  patch.vertices.resize(nu * nv);
  const std::vector<SlopeParams> rows = [&] {
    std::vector<SlopeParams> r;
    for (double u : patch.us) r.push_back(SlopeParams::from_angle(theta, u));
    return r;
  }();
  for_each_index(exec, nu, [&](std::size_t i) {
    for (std::size_t j = 0; j < nv; ++j) {
      patch.vertices[i * nv + j] = slope_surface_point(rows[i], f, patch.vs[j]);
    }
  });
  return patch;
}

HelixEquivalence helix_equivalence(const SphericalCurve& f, const SlopeParams& sp,
                        std::span<const double> grid) {
  const auto g = checked_grid(grid, 3);
  HelixEquivalence out;
  std::vector<double> kg(g.size());
  std::vector<FrenetData> frames(g.size());
  std::vector<double> dres(g.size());
  const double c = std::cos(sp.xi);
  for_each_index(Exec::Parallel, g.size(), [&](std::size_t i) {
    const SabbanData sd = sabban_frame(f, g[i]);
    kg[i] = sd.kg;
    frames[i] = frenet_from_jet(bertrand_jet(sp, f, g[i], 3));

    const BertrandCurvatures bc = bertrand_curvatures(sp, f, g[i]);
    const double dk = bc.eps * std::sin(2.0 * sp.xi) * sd.kg1 / (2.0 * sp.a);
    const double dt = c * c * sd.kg1 / sp.a;
    const double h = kCurvatureStep;
    const auto lo = bertrand_curvatures(sp, f, g[i] - h);
    const auto hi = bertrand_curvatures(sp, f, g[i] + h);
    dres[i] = std::max(std::abs((hi.kappa - lo.kappa) / (2.0 * h) - dk),
                       std::abs((hi.tau - lo.tau) / (2.0 * h) - dt));
  });
  const auto [kmin, kmax] = std::minmax_element(kg.begin(), kg.end());
  out.kg_const = *kmax - *kmin <= kConstKgTol;
  out.is_helix = helix_test(frames).is_helix;
  out.derivative_residual = *std::max_element(dres.begin(), dres.end());
  return out;
}

}  // namespace lgeom
