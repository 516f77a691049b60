#include "lgeom/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lgeom/error.hpp"
#include "lgeom/numerics.hpp"
#include "lgeom/taylor.hpp"

namespace lgeom {

struct ParamCurve::Table {
  double t0 = 0.0;
  double h = 0.0;
  std::vector<LVec3> pts;
};

namespace {

constexpr int kWindow = 6;  // nodes in the off-grid interpolation window
constexpr double kNodeSnap = 1e-9;

void check_jet(const Jet& j) {
  for (int k = 0; k <= j.order; ++k) {
    if (!is_finite(j.d[static_cast<std::size_t>(k)])) {
      fail(ErrorKind::NonFinite, "curve produced a non-finite jet entry");
    }
  }
}

}  // namespace

ParamCurve ParamCurve::analytic(Interval domain, Evaluator eval, int max_order) {
  if (!(domain.hi > domain.lo)) fail(ErrorKind::InvalidRange, "empty curve domain");
  if (max_order < 0 || max_order > kMaxJetOrder) {
    fail(ErrorKind::InvalidArgument, "analytic jet order must be in 0..4");
  }
  ParamCurve c;
  c.domain_ = domain;
  c.max_order_ = max_order;
  c.eval_ = std::move(eval);
  return c;
}

ParamCurve ParamCurve::sampled(double t0, double h, std::vector<LVec3> samples) {
  if (samples.size() < static_cast<std::size_t>(kWindow)) {
    fail(ErrorKind::InvalidArgument, "sampled curve needs at least 6 samples");
  }
  if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(t0)) {
    fail(ErrorKind::InvalidArgument, "sampled curve needs a positive finite step");
  }
  for (const auto& p : samples) {
    if (!is_finite(p)) fail(ErrorKind::NonFinite, "non-finite sample");
  }
  ParamCurve c;
  auto table = std::make_shared<Table>();
  table->t0 = t0;
  table->h = h;
  table->pts = std::move(samples);
  c.domain_ = {t0, t0 + h * static_cast<double>(table->pts.size() - 1)};
  c.max_order_ = kMaxSampledOrder;
  c.table_ = std::move(table);
  return c;
}

ParamCurve ParamCurve::resampled(std::span<const double> t, std::span<const LVec3> points,
                                 std::size_t n) {
  if (t.size() != points.size()) fail(ErrorKind::InvalidArgument, "mismatched sample arrays");
  std::vector<double> x(t.begin(), t.end());
  std::vector<double> c1, c2, c3;
  for (const auto& p : points) {
    c1.push_back(p.x1);
    c2.push_back(p.x2);
    c3.push_back(p.x3);
  }
  const num::MonotoneCubic f1(x, c1), f2(x, c2), f3(x, c3);
  const auto grid = num::linspace(x.front(), x.back(), n);
  std::vector<LVec3> out;
  out.reserve(n);
  for (double g : grid) out.push_back({f1(g), f2(g), f3(g)});
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
  return sampled(x.front(), h, std::move(out));
}

double ParamCurve::step() const { return table_ ? table_->h : 0.0; }

std::vector<double> ParamCurve::breakpoints(double a, double b) const {
  std::vector<double> out;
  if (!table_) return out;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  for (std::size_t i = 0; i < table_->pts.size(); ++i) {
    const double node = table_->t0 + table_->h * static_cast<double>(i);
    if (node > lo && node < hi) out.push_back(node);
  }
  return out;
}

std::vector<double> ParamCurve::nodes(std::size_t margin) const {
  std::vector<double> out;
  if (!table_) return out;
  const std::size_t n = table_->pts.size();
  for (std::size_t i = margin; i + margin < n; ++i) {
    out.push_back(table_->t0 + table_->h * static_cast<double>(i));
  }
  return out;
}

Jet ParamCurve::jet_at(double t, int order) const {
  if (order < 0 || order > max_order_) {
    fail(ErrorKind::OrderUnavailable,
         "derivative order " + std::to_string(order) + " exceeds the source's " +
             std::to_string(max_order_));
  }
  if (!std::isfinite(t) || !domain_.contains(t, 1e-12 * std::max(1.0, domain_.length()))) {
    fail(ErrorKind::OutOfDomain, "parameter " + std::to_string(t) + " outside curve domain");
  }
  Jet j = table_ ? sampled_jet(t, order) : eval_(t, order);
  j.t = t;
  j.order = order;
  for (int k = order + 1; k < 5; ++k) j.d[static_cast<std::size_t>(k)] = LVec3{};
  check_jet(j);
  return j;
}

Jet ParamCurve::sampled_jet(double t, int order) const {
  const Table& tb = *table_;
  const auto n = static_cast<long>(tb.pts.size());
  const double s = (t - tb.t0) / tb.h;
  const long nearest = std::clamp(std::lround(s), 0L, n - 1);
  Jet j;
  auto at = [&](long i) { return tb.pts[static_cast<std::size_t>(i)]; };

  if (std::abs(s - static_cast<double>(nearest)) <= kNodeSnap && nearest >= 2 &&
      nearest <= n - 3) {
    // Central stencils on the grid itself.
    const long i = nearest;
    const double h = tb.h;
    j.d[0] = at(i);
    if (order >= 1) j.d[1] = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * h);
    if (order >= 2) {
      j.d[2] = (-1.0 * at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) - at(i + 2)) /
               (12.0 * h * h);
    }
    if (order >= 3) {
      auto third = [&](long k) {
        return (at(i + 2 * k) - 2.0 * at(i + k) + 2.0 * at(i - k) - at(i - 2 * k)) /
               (2.0 * std::pow(static_cast<double>(k) * h, 3));
      };
      const LVec3 fine = third(1);
      // Richardson extrapolation with the doubled stencil when it fits.
      j.d[3] = (i >= 4 && i <= n - 5) ? (4.0 * fine - third(2)) / 3.0 : fine;
    }
    return j;
  }

  // Off-grid (or too close to an end for a centered stencil): differentiate
  // the degree-5 interpolant through the six nodes surrounding t.
  const long cell = std::clamp(static_cast<long>(std::floor(s)), 0L, n - 2);
  const long first = std::clamp(cell - 2, 0L, n - kWindow);
  const double local = s - static_cast<double>(first);
  const auto ord = static_cast<std::size_t>(order);
  for (long m = 0; m < kWindow; ++m) {
    Series basis(ord, 1.0);
    double denom = 1.0;
    for (long k = 0; k < kWindow; ++k) {
      if (k == m) continue;
      basis = basis * (Series::variable(local, ord) + (-static_cast<double>(k)));
      denom *= static_cast<double>(m - k);
    }
    const LVec3 y = at(first + m);
    double hp = 1.0;
    for (std::size_t r = 0; r <= ord; ++r) {
      j.d[r] += (basis.derivative(r) / (denom * hp)) * y;
      hp *= tb.h;
    }
  }
  return j;
}

double arc_length(const ParamCurve& curve, double t0, double t1) {
  auto speed = [&](double t) {
    const LVec3 v = curve.jet_at(t, 1).d[1];
    if (causal_class(v) == CausalClass::Lightlike) {
      fail(ErrorKind::NullVelocityEncountered, "lightlike velocity at t=" + std::to_string(t));
    }
    return lnorm(v);
  };
  return integrate_along(curve, speed, t0, t1);
}

const char* to_string(FrenetCase c) noexcept {
  switch (c) {
    case FrenetCase::TimelikeCurve: return "timelike";
    case FrenetCase::SpacelikeTimelikeNormal: return "spacelike/timelike-normal";
    case FrenetCase::SpacelikeSpacelikeNormal: return "spacelike/spacelike-normal";
  }
  return "unknown";
}

FrenetData frenet_from_jet(const Jet& jet) {
  if (jet.order < 3) fail(ErrorKind::OrderUnavailable, "Frenet apparatus needs a third-order jet");
  const LVec3& v1 = jet.d[1];
  const LVec3& v2 = jet.d[2];
  const LVec3& v3 = jet.d[3];

  if (max_abs(v1) == 0.0 || causal_class(v1) == CausalClass::Lightlike) {
    fail(ErrorKind::LightlikeTangent, "velocity is lightlike or zero");
  }
  const double q1 = minkowski_inner(v1, v1);
  FrenetData fd;
  fd.t = jet.t;
  fd.speed = std::sqrt(std::abs(q1));
  fd.T = v1 / fd.speed;
  const double sign_t = q1 > 0.0 ? 1.0 : -1.0;

  // Component of the acceleration orthogonal to the tangent.
  const LVec3 normal = v2 - (sign_t * minkowski_inner(v2, fd.T)) * fd.T;
  if (max_abs(normal) <= 1e-10 * std::max(1.0, max_abs(v2))) {
    fail(ErrorKind::VanishingCurvature, "acceleration is parallel to the velocity");
  }
  const CausalClass cn = causal_class(normal);
  if (cn == CausalClass::Lightlike) fail(ErrorKind::LightlikeNormal, "principal normal is lightlike");
  fd.N = normal / lnorm(normal);

  const LVec3 c = lcross(v1, v2);
  const double cc = std::abs(minkowski_inner(c, c));
  fd.kappa = std::sqrt(cc) / std::pow(std::abs(q1), 1.5);
  fd.tau = det3(v1, v2, v3) / cc;

  if (sign_t < 0.0) {
    fd.kind = FrenetCase::TimelikeCurve;
    fd.B = lcross(fd.T, fd.N);
  } else if (cn == CausalClass::Timelike) {
    fd.kind = FrenetCase::SpacelikeTimelikeNormal;
    fd.B = lcross(fd.T, fd.N);
  } else {
    fd.kind = FrenetCase::SpacelikeSpacelikeNormal;
    fd.B = lcross(fd.N, fd.T);
  }
  return fd;
}

FrenetData frenet_apparatus(const ParamCurve& curve, double t) {
  return frenet_from_jet(curve.jet_at(t, 3));
}

std::vector<FrenetData> frenet_sweep(const ParamCurve& curve, std::span<const double> grid,
                                     Exec exec) {
  std::vector<FrenetData> out(grid.size());
  for_each_index(exec, grid.size(), [&](std::size_t i) { out[i] = frenet_apparatus(curve, grid[i]); });
  return out;
}

std::array<LVec3, 3> frenet_rates(const FrenetData& fd) {
  const double k = fd.kappa;
  const double t = fd.tau;
  switch (fd.kind) {
    case FrenetCase::TimelikeCurve: return {k * fd.N, k * fd.T + t * fd.B, -t * fd.N};
    case FrenetCase::SpacelikeTimelikeNormal: return {k * fd.N, k * fd.T + t * fd.B, t * fd.N};
    case FrenetCase::SpacelikeSpacelikeNormal: return {k * fd.N, -k * fd.T + t * fd.B, t * fd.N};
  }
  return {};
}

LVec3 darboux_vector(const FrenetData& fd) {
  switch (fd.kind) {
    case FrenetCase::TimelikeCurve: return fd.tau * fd.T + fd.kappa * fd.B;
    case FrenetCase::SpacelikeSpacelikeNormal: return -fd.tau * fd.T + fd.kappa * fd.B;
    case FrenetCase::SpacelikeTimelikeNormal: return fd.tau * fd.T - fd.kappa * fd.B;
  }
  return {};
}

LVec3 darboux_indicatrix(const FrenetData& fd) {
  const LVec3 d = darboux_vector(fd);
  if (max_abs(d) == 0.0 || causal_class(d) == CausalClass::Lightlike) {
    fail(ErrorKind::NullDarboux, "Darboux vector is null");
  }
  return d / lnorm(d);
}

HelixResult helix_test(std::span<const FrenetData> frames) {
  if (frames.empty()) fail(ErrorKind::InvalidArgument, "helix test needs a non-empty grid");
  double lo = INFINITY;
  double hi = -INFINITY;
  double sum = 0.0;
  for (const auto& f : frames) {
    const double r = f.tau / f.kappa;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    sum += r;
  }
  HelixResult out;
  out.ratio = sum / static_cast<double>(frames.size());
  out.spread = hi - lo;
  out.is_helix = out.spread <= 1e-6 * (1.0 + std::abs(out.ratio));
  return out;
}

HelixResult helix_test(const ParamCurve& curve, std::span<const double> grid, Exec exec) {
  const auto frames = frenet_sweep(curve, grid, exec);
  return helix_test(frames);
}

BertrandFit bertrand_fit(std::span<const FrenetData> frames) {
  if (frames.size() < 3) fail(ErrorKind::InvalidArgument, "Bertrand fit needs >= 3 grid points");
  double skk = 0.0, skt = 0.0, stt = 0.0, rk = 0.0, rt = 0.0;
  for (const auto& f : frames) {
    skk += f.kappa * f.kappa;
    skt += f.kappa * f.tau;
    stt += f.tau * f.tau;
    rk += f.kappa;
    rt += f.tau;
  }
  BertrandFit fit;
  const double det = skk * stt - skt * skt;
  if (std::abs(det) > 1e-12 * skk * stt && det != 0.0) {
    fit.A = (stt * rk - skt * rt) / det;
    fit.B = (skk * rt - skt * rk) / det;
  } else {
    // Rank one: project onto the dominant eigenvector of the normal matrix.
    const double tr = skk + stt;
    const double disc = std::sqrt(std::max(0.0, 0.25 * (skk - stt) * (skk - stt) + skt * skt));
    const double lmax = 0.5 * tr + disc;
    double vx = skt;
    double vy = lmax - skk;
    if (std::abs(vx) + std::abs(vy) == 0.0) {
      vx = skk >= stt ? 1.0 : 0.0;
      vy = skk >= stt ? 0.0 : 1.0;
    }
    const double len = std::hypot(vx, vy);
    vx /= len;
    vy /= len;
    const double coef = (vx * rk + vy * rt) / lmax;
    fit.A = coef * vx;
    fit.B = coef * vy;
    fit.non_unique = true;
  }
  for (const auto& f : frames) {
    fit.residual = std::max(fit.residual, std::abs(fit.A * f.kappa + fit.B * f.tau - 1.0));
  }
  fit.is_bertrand = fit.residual <= kBertrandTol;
  return fit;
}

BertrandFit bertrand_fit(const ParamCurve& curve, std::span<const double> grid, Exec exec) {
  const auto frames = frenet_sweep(curve, grid, exec);
  return bertrand_fit(frames);
}

}  // namespace lgeom
