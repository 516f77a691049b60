#include "lgeom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lgeom/bertrand.hpp"
#include "lgeom/error.hpp"
#include "lgeom/identities.hpp"
#include "lgeom/numerics.hpp"
#include "lgeom/registry.hpp"

namespace lgeom::verify {

namespace {

constexpr std::size_t kCrossTriples = 10000;
constexpr std::uint64_t kSeed = 0x5eed'1234'abcdULL;
constexpr std::size_t kCurvePoints = 32;
constexpr std::size_t kGoldenPoints = 64;
constexpr std::size_t kSurfaceRows = 32;
constexpr std::size_t kSurfaceCols = 64;
constexpr std::size_t kInversePoints = 81;
constexpr double kFdStep = 1e-3;
constexpr double kSampleStep = 2.5e-3;

struct NamedCurve {
  SphericalCurve curve;
  Interval range;  // where the Bertrand pipeline is exercised
};

struct Fixture {
  std::vector<NamedCurve> registry;
  NamedCurve bent;  // warped with an interior critical point of kg
  std::vector<SlopeParams> params;
  Exec exec = Exec::Parallel;

  std::vector<double> grid(const NamedCurve& c, std::size_t n = kCurvePoints) const {
    return num::linspace(c.range.lo, c.range.hi, n);
  }
};

Fixture make_fixture(Exec exec) {
  const double half_width = 1.5;
  Fixture fx{{{geodesic_hyperbola(), {-half_width, half_width}},
              {pseudo_circle(0.6), {-half_width, half_width}},
              {warped(2.0), {-0.5, 0.3}}},
             {warped(2.0, 1.0), {-0.8, 0.2}},
             {SlopeParams::from_angle(std::numbers::pi / 4, std::numbers::e),
              SlopeParams::from_angle(std::numbers::pi / 3, 1.5),
              SlopeParams::from_angle(std::numbers::pi / 6, 0.8)},
             exec};
  return fx;
}

std::vector<double> interior(const NamedCurve& c, std::size_t n) {
  return num::linspace(c.range.lo, c.range.hi, n);
}

template <class F>
double max_over(std::span<const double> grid, Exec exec, const F& f) {
  std::vector<double> r(grid.size());
  for_each_index(exec, grid.size(), [&](std::size_t i) { r[i] = f(grid[i]); });
  double m = 0.0;
  for (double x : r) m = std::isnan(x) ? std::numeric_limits<double>::infinity() : std::max(m, x);
  return m;
}

// Frenet frame checks on three reference curves, one per causal case.
std::vector<std::pair<ParamCurve, std::vector<double>>> frenet_cases(const Fixture& fx) {
  return {{timelike_helix(), num::linspace(-3.0, 3.0, 16)},
          {bertrand_curve(fx.params[0], fx.registry[2].curve), num::linspace(-0.5, 0.3, 16)},
          {twisted_cubic(), num::linspace(0.2, 0.9, 16)}};
}

double check_cross(const Fixture& fx) {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::vector<Triple> batch(kCrossTriples);
  for (auto& t : batch) {
    for (auto& v : t) v = {coord(rng), coord(rng), coord(rng)};
  }
  return cross_residuals(batch, fx.exec).worst();
}

double check_helix(const Fixture& fx) {
  const auto frames = frenet_sweep(timelike_helix(), num::linspace(-3.0, 3.0, 64), fx.exec);
  double r = 0.0;
  for (const auto& f : frames) {
    r = std::max({r, std::abs(f.kappa - 1.0 / 3.0), std::abs(f.tau - 2.0 / 3.0)});
  }
  return r;
}

double check_frame_invariants(const Fixture& fx) {
  double r = 0.0;
  for (const auto& [curve, grid] : frenet_cases(fx)) {
    for (const auto& f : frenet_sweep(curve, grid, fx.exec)) {
      double nt = 1.0, nn = 1.0, nb = 1.0;
      LVec3 b = lcross(f.T, f.N);
      switch (f.kind) {
        case FrenetCase::TimelikeCurve: nt = -1.0; break;
        case FrenetCase::SpacelikeTimelikeNormal: nn = -1.0; break;
        case FrenetCase::SpacelikeSpacelikeNormal:
          nb = -1.0;
          b = lcross(f.N, f.T);
          break;
      }
      r = std::max({r, std::abs(minkowski_inner(f.T, f.T) - nt),
                    std::abs(minkowski_inner(f.N, f.N) - nn),
                    std::abs(minkowski_inner(f.B, f.B) - nb), std::abs(minkowski_inner(f.T, f.N)),
                    std::abs(minkowski_inner(f.T, f.B)), std::abs(minkowski_inner(f.N, f.B)),
                    max_abs_diff(f.B, b)});
    }
  }
  return r;
}

// Observed convergence order of a 3-point central difference of the frame
// against the Frenet equations, from steps 1e-2 and 1e-3.
double check_frenet_fd(const Fixture& fx) {
  double worst = 0.0;
  for (const auto& [curve, grid] : frenet_cases(fx)) {
    auto error_at = [&, &curve = curve](double h) {
      return max_over(grid, fx.exec, [&](double t) {
        const FrenetData f = frenet_apparatus(curve, t);
        const FrenetData p = frenet_apparatus(curve, t + h);
        const FrenetData m = frenet_apparatus(curve, t - h);
        const auto rates = frenet_rates(f);
        const double ds = 2.0 * h * f.speed;
        return std::max({max_abs_diff((p.T - m.T) / ds, rates[0]),
                         max_abs_diff((p.N - m.N) / ds, rates[1]),
                         max_abs_diff((p.B - m.B) / ds, rates[2])});
      });
    };
    const double order = std::log10(error_at(1e-2) / error_at(1e-3));
    worst = std::max(worst, std::abs(order - 2.0));
  }
  return worst;
}

std::vector<const NamedCurve*> all_spherical(const Fixture& fx) {
  std::vector<const NamedCurve*> out;
  for (const auto& c : fx.registry) out.push_back(&c);
  out.push_back(&fx.bent);
  return out;
}

double check_sabban_closure(const Fixture& fx) {
  double r = 0.0;
  for (const NamedCurve* nc : all_spherical(fx)) {
    const SphericalCurve* c = &nc->curve;
    const auto grid = interior(*nc, 16);
    r = std::max(r, max_over(grid, fx.exec, [&](double v) {
      const SabbanData sd = sabban_frame(*c, v);
      auto rate = [&](LVec3 SabbanData::*field) {
        return num::diff1_5pt([&](double x) { return sabban_frame(*c, x).*field; }, v, kFdStep);
      };
      return std::max({max_abs_diff(rate(&SabbanData::f), sd.t),
                       max_abs_diff(rate(&SabbanData::t), sd.f + sd.kg * sd.s),
                       max_abs_diff(rate(&SabbanData::s), sd.kg * sd.t)});
    }));
  }
  return r;
}

std::vector<LVec3> probes(const SphericalCurve& c) {
  const double ch = std::cosh(0.3);
  const double sh = std::sinh(0.3);
  return {{1.0, 0.0, 0.0}, {0.0, ch, sh}, pseudo_evolute(sabban_frame(c, 0.1))};
}

double check_height_fd(const Fixture& fx) {
  double r = 0.0;
  for (const NamedCurve* nc : all_spherical(fx)) {
    const SphericalCurve* c = &nc->curve;
    const auto grid = interior(*nc, 12);
    for (const LVec3& u : probes(*c)) {
      r = std::max(r, max_over(grid, fx.exec, [&](double v) {
        double e = 0.0;
        for (int k = 1; k <= 4; ++k) {
          const double fd = num::diff1_5pt([&](double x) { return height(*c, x, u, k - 1); }, v,
                                           kFdStep);
          e = std::max(e, std::abs(fd - height(*c, v, u, k)));
        }
        return e;
      }));
    }
  }
  return r;
}

double check_stationarity(const Fixture& fx) {
  double mismatches = 0.0;
  for (const NamedCurve* nc : all_spherical(fx)) {
    const SphericalCurve* c = &nc->curve;
    for (double v : interior(*nc, 9)) {
      const SabbanData sd = sabban_frame(*c, v);
      const LVec3 ev = pseudo_evolute(sd);
      const double kg1 = std::abs(sd.kg1) / std::sqrt(1.0 + sd.kg * sd.kg);
      for (int sign : {1, -1}) {
        const Stationarity st = stationarity_class(*c, v, static_cast<double>(sign) * ev);
        if (!st.consistent || st.order < 2 || st.evolute_sign != sign) mismatches += 1.0;
        if (kg1 > 1e-3 && st.order != 2) mismatches += 1.0;
      }
      const Stationarity at_f = stationarity_class(*c, v, sd.f);
      if (!at_f.consistent || at_f.order != 1) mismatches += 1.0;
      const Stationarity at_s = stationarity_class(*c, v, sd.s);
      if (!at_s.consistent) mismatches += 1.0;
    }
  }
  return mismatches;
}

double check_evolute_fd(const Fixture& fx) {
  double r = 0.0;
  for (const NamedCurve* nc : {&fx.registry[2], &fx.bent}) {
    const SphericalCurve* c = &nc->curve;
    r = std::max(r, max_over(interior(*nc, 16), fx.exec, [&](double v) {
      const LVec3 fd = num::diff1_5pt(
          [&](double x) { return pseudo_evolute(sabban_frame(*c, x)); }, v, kFdStep);
      return std::max(max_abs_diff(fd, evolute_velocity(*c, v, 1)),
                      max_abs_diff(-fd, evolute_velocity(*c, v, -1)));
    }));
  }
  return r;
}

double check_evolute_stationary(const Fixture& fx) {
  double r = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& c = fx.registry[i];
    r = std::max(r, max_over(fx.grid(c), fx.exec,
                             [&](double v) { return max_abs(evolute_velocity(c.curve, v, 1)); }));
  }
  return r;
}

double check_contact_generic(const Fixture& fx) {
  double bad = 0.0;
  for (const NamedCurve* nc : {&fx.registry[2], &fx.bent}) {
    const SphericalCurve* c = &nc->curve;
    for (double v : interior(*nc, 24)) {
      const SabbanData sd = sabban_frame(*c, v);
      if (std::abs(sd.kg1) < 1e-2) continue;
      if (contact_order(*c, osculating_circle(*c, v), v) != 3) bad += 1.0;
    }
  }
  return bad;
}

double check_contact_four(const Fixture& fx) {
  const SphericalCurve& c = fx.bent.curve;
  const auto roots = num::find_roots([&](double v) { return sabban_frame(c, v).kg1; },
                                     fx.bent.range.lo, fx.bent.range.hi, 64);
  double bad = std::abs(static_cast<double>(roots.size()) - 1.0);
  for (double v : roots) {
    const SabbanData sd = sabban_frame(c, v);
    if (!(std::abs(sd.kg2) > kVanishTol)) bad += 1.0;
    if (contact_order(c, osculating_circle(c, v), v) != 4) bad += 1.0;
  }
  return bad;
}

template <class F>
double over_pipeline(const Fixture& fx, const F& f) {
  double r = 0.0;
  for (const auto& c : fx.registry) {
    for (const auto& sp : fx.params) {
      r = std::max(r, f(c, sp));
    }
  }
  return r;
}

double check_identity_closed(const Fixture& fx) {
  return over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    return max_over(fx.grid(c), fx.exec, [&](double v) {
      const BertrandCurvatures bc = bertrand_curvatures(sp, c.curve, v);
      return std::abs(sp.a * (bc.eps * bc.kappa - std::tan(sp.xi) * bc.tau) - 1.0);
    });
  });
}

double check_identity_frenet(const Fixture& fx) {
  return over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    const ParamCurve gamma = bertrand_curve(sp, c.curve);
    const int eps = std::cos(sp.xi) / sp.a > 0.0 ? 1 : -1;
    return max_over(fx.grid(c), fx.exec, [&](double v) {
      const FrenetData f = frenet_apparatus(gamma, v);
      return std::abs(sp.a * (eps * f.kappa - std::tan(sp.xi) * f.tau) - 1.0);
    });
  });
}

double closed_vs_frenet(const Fixture& fx, const SphericalCurve& f, const SlopeParams& sp,
                        std::span<const double> grid) {
  const ParamCurve gamma = bertrand_curve(sp, f);
  return max_over(grid, fx.exec, [&](double v) {
    const FrenetData num = frenet_apparatus(gamma, v);
    const FrenetData cf = bertrand_frames(sp, f, v);
    return std::max({std::abs(num.kappa - cf.kappa), std::abs(num.tau - cf.tau),
                     max_abs_diff(num.T, cf.T), max_abs_diff(num.N, cf.N),
                     max_abs_diff(num.B, cf.B)});
  });
}

double check_closed_vs_frenet(const Fixture& fx) {
  double r = over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    return closed_vs_frenet(fx, c.curve, sp, fx.grid(c));
  });
  const auto& pc = fx.registry[1];
  return std::max(r, closed_vs_frenet(fx, pc.curve, SlopeParams::from_bertrand(1.0, 0.3),
                                      fx.grid(pc)));
}

double check_curvature_derivatives(const Fixture& fx) {
  return over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    return helix_equivalence(c.curve, sp, fx.grid(c)).derivative_residual;
  });
}

double check_darboux(const Fixture& fx) {
  return over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    return max_over(fx.grid(c), fx.exec,
                    [&](double v) { return darboux_equals_evolute(sp, c.curve, v).residual; });
  });
}

double check_darboux_example(const Fixture& fx) {
  const auto& c = fx.registry[0];
  const ParamCurve gamma = bertrand_curve(fx.params[0], c.curve);
  return max_over(fx.grid(c), fx.exec, [&](double v) {
    return max_abs_diff(darboux_indicatrix(frenet_apparatus(gamma, v)), LVec3{0.0, 1.0, 0.0});
  });
}

double check_surface_velocity(const Fixture& fx) {
  return over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    return surface_velocity_residual(sp, c.curve, fx.grid(c));
  });
}

double check_integrated_equal(const Fixture& fx) {
  return over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    return max_over(fx.grid(c), fx.exec, [&](double v) {
      return max_abs_diff(integrate_surface_curve(sp, c.curve, v), synthesize_bertrand(sp, c.curve, v));
    });
  });
}

double check_integrated_fit(const Fixture& fx) {
  return over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    const auto n = static_cast<std::size_t>(std::lround(c.range.length() / kSampleStep)) + 1;
    const ParamCurve sampled = sample_surface_integral(sp, c.curve, c.range.lo, c.range.hi, n, fx.exec);
    return bertrand_fit(sampled, sampled.nodes(4), fx.exec).residual;
  });
}

double check_pseudo_circle_helix(const Fixture& fx) {
  double bad = 0.0;
  for (std::size_t i = 0; i < fx.registry.size(); ++i) {
    const auto& c = fx.registry[i];
    const bool constant_expected = i < 2;
    for (const auto& sp : fx.params) {
      const HelixEquivalence r = helix_equivalence(c.curve, sp, fx.grid(c));
      if (!r.agree()) bad += 1.0;
      if (r.kg_const != constant_expected) bad += 1.0;
    }
  }
  return bad;
}

double check_example_bertrand(const Fixture& fx) {
  const auto grid = num::linspace(0.0, 2.0, kGoldenPoints);
  const auto pts = sample_synthesized(fx.params[0], fx.registry[0].curve, grid, fx.exec);
  const double c = std::numbers::sqrt2 / 2.0 * std::numbers::e;
  double r = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = grid[i];
    const LVec3 expected{c * std::cos(1.0) * std::sinh(v), -c * std::sin(1.0) * v,
                         c * std::cos(1.0) * (std::cosh(v) - 1.0)};
    r = std::max(r, max_abs_diff(pts[i], expected));
  }
  return r;
}

double check_example_surface(const Fixture& fx) {
  const double theta = std::numbers::pi / 4;
  const SurfacePatch patch = surface_mesh(theta, fx.registry[0].curve, {0.5, std::numbers::e},
                                          {-1.5, 1.5}, kSurfaceRows, kSurfaceCols, fx.exec);
  double r = 0.0;
  for (std::size_t i = 0; i < patch.nu; ++i) {
    const double u = patch.us[i];
    const double xi = std::log(u) / std::tan(theta);
    const double scale = u * std::sin(theta);
    for (std::size_t j = 0; j < patch.nv; ++j) {
      const double v = patch.vs[j];
      const LVec3 expected = scale * LVec3{std::cos(xi) * std::cosh(v), -std::sin(xi),
                                           std::cos(xi) * std::sinh(v)};
      r = std::max(r, max_abs_diff(patch.vertex(i, j), expected));
    }
  }
  // The u = 1 row of a grid that contains it is sin(theta) f(v).
  const SurfacePatch unit = surface_mesh(theta, fx.registry[0].curve, {0.5, 1.5}, {-1.5, 1.5}, 3,
                                         kSurfaceCols, fx.exec);
  for (std::size_t j = 0; j < unit.nv; ++j) {
    r = std::max(r, max_abs_diff(unit.vertex(1, j),
                                 std::sin(theta) * fx.registry[0].curve.point(unit.vs[j])));
  }
  return r;
}

double check_round_trip(const Fixture& fx) {
  return over_pipeline(fx, [&](const NamedCurve& c, const SlopeParams& sp) {
    const ParamCurve gamma = bertrand_curve(sp, c.curve);
    const auto grid = num::linspace(c.range.lo, c.range.hi, kInversePoints);
    const SphericalCurve back = inverse_spherical(gamma, sp.xi, grid);
    double r = 0.0;
    for (double v : grid) r = std::max(r, max_abs_diff(back.point(v), c.curve.point(v)));
    const auto coarse = num::linspace(c.range.lo, c.range.hi, 9);
    const auto again = sample_synthesized(sp, back, coarse, fx.exec);
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      r = std::max(r, max_abs_diff(again[i], gamma.point(coarse[i])));
    }
    return r;
  });
}

double check_non_bertrand(const Fixture&) {
  try {
    inverse_spherical(twisted_cubic(), 0.3, num::linspace(0.2, 1.0, 64));
  } catch (const GeometryError& e) {
    return e.kind() == ErrorKind::NotBertrand ? 0.0 : 1.0;
  }
  return 1.0;
}

struct CheckSpec {
  const char* name;
  double tolerance;
  double (*run)(const Fixture&);
};

const std::vector<CheckSpec>& specs() {
  static const std::vector<CheckSpec> table = {
      {"cross_product_identities", 1e-10, check_cross},
      {"frenet_timelike_helix", 1e-8, check_helix},
      {"frenet_frame_invariants", 1e-8, check_frame_invariants},
      {"frenet_equations_fd_order", 0.1, check_frenet_fd},
      {"sabban_closure", 1e-5, check_sabban_closure},
      {"height_derivatives_fd", 1e-6, check_height_fd},
      {"height_stationarity_classes", 0.0, check_stationarity},
      {"evolute_velocity_fd", 1e-6, check_evolute_fd},
      {"evolute_stationary_constant_kg", 1e-8, check_evolute_stationary},
      {"contact_order_generic", 0.0, check_contact_generic},
      {"contact_order_four_point", 0.0, check_contact_four},
      {"bertrand_identity", 1e-8, check_identity_closed},
      {"bertrand_identity_frenet", 1e-6, check_identity_frenet},
      {"curvature_closed_form_vs_frenet", 1e-6, check_closed_vs_frenet},
      {"curvature_derivatives_fd", 1e-6, check_curvature_derivatives},
      {"darboux_equals_evolute", 1e-5, check_darboux},
      {"darboux_example", 1e-8, check_darboux_example},
      {"surface_velocity_match", 1e-6, check_surface_velocity},
      {"integrated_surface_equals_bertrand", 1e-9, check_integrated_equal},
      {"integrated_surface_bertrand_fit", 1e-6, check_integrated_fit},
      {"pseudo_circle_iff_helix", 0.0, check_pseudo_circle_helix},
      {"example_bertrand_golden", 1e-8, check_example_bertrand},
      {"example_surface_golden", 1e-10, check_example_surface},
      {"inverse_round_trip", 1e-5, check_round_trip},
      {"non_bertrand_rejected", 0.0, check_non_bertrand},
  };
  return table;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& s : specs()) out.emplace_back(s.name);
  return out;
}

double default_tolerance(const std::string& name) {
  for (const auto& s : specs()) {
    if (name == s.name) return s.tolerance;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

Report run(const Options& options) {
  for (const auto& [name, tol] : options.tolerances) {
    default_tolerance(name);
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance for '" + name + "' must be >= 0");
  }
  const auto start = std::chrono::steady_clock::now();
  const Fixture fx = make_fixture(options.exec);

  Report report;
  report.overall = true;
  for (const auto& s : specs()) {
    CheckResult r;
    r.name = s.name;
    const auto it = options.tolerances.find(s.name);
    r.tolerance = it == options.tolerances.end() ? s.tolerance : it->second;
    try {
      r.residual = s.run(fx);
    } catch (const std::exception& e) {
      r.residual = std::numeric_limits<double>::infinity();
      r.error = e.what();
    }
    r.pass = r.error.empty() && r.residual <= r.tolerance;
    report.overall = report.overall && r.pass;
    report.tolerances[r.name] = r.tolerance;
    report.checks.push_back(std::move(r));
  }
  report.grids = {{"cross_product_triples", static_cast<long>(kCrossTriples)},
                  {"pipeline_points_per_curve", static_cast<long>(kCurvePoints)},
                  {"golden_points", static_cast<long>(kGoldenPoints)},
                  {"surface_rows", static_cast<long>(kSurfaceRows)},
                  {"surface_cols", static_cast<long>(kSurfaceCols)},
                  {"inverse_points", static_cast<long>(kInversePoints)},
                  {"parameter_sets", static_cast<long>(fx.params.size())},
                  {"registry_curves", static_cast<long>(fx.registry.size())},
                  {"threads", static_cast<long>(parallel_threads())}};
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json(const Report& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j = {{"name", c.name},
                        {"residual", std::isfinite(c.residual) ? nlohmann::json(c.residual)
                                                               : nlohmann::json(nullptr)},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}};
    if (!c.error.empty()) j["error"] = c.error;
    checks.push_back(std::move(j));
  }
  const nlohmann::json doc = {
      {"checks", checks},
      {"overall", report.overall},
      {"environment", {{"tolerances", report.tolerances}, {"grids", report.grids}}},
      {"elapsed_seconds", report.elapsed_seconds}};
  return doc.dump(2) + "\n";
}

}  // namespace lgeom::verify
