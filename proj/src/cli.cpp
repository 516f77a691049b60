#include "lgeom/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgeom/bertrand.hpp"
#include "lgeom/error.hpp"
#include "lgeom/io.hpp"
#include "lgeom/numerics.hpp"
#include "lgeom/registry.hpp"
#include "lgeom/verify.hpp"

namespace lgeom::cli {

namespace {

constexpr double kDefaultTheta = std::numbers::pi / 4;
constexpr double kDefaultU = std::numbers::e;

struct RunConfig {
  std::string curve = "paper-geodesic";
  std::optional<double> theta, u, a, xi;
  std::optional<double> vmin, vmax, umin, umax;
  std::optional<std::size_t> nv, nu;
  std::string out;
  std::string report;
  std::vector<std::string> tolerances;
  std::vector<double> vector;
};

SlopeParams bertrand_params(const RunConfig& rc) {
  const bool angle = rc.theta || rc.u;
  const bool direct = rc.a || rc.xi;
  if (angle && direct) {
    throw std::invalid_argument("give either --theta/--u or --a/--xi, not both");
  }
  if (direct) {
    if (!rc.a || !rc.xi) throw std::invalid_argument("--a and --xi must be given together");
    return SlopeParams::from_bertrand(*rc.a, *rc.xi);
  }
  return SlopeParams::from_angle(rc.theta.value_or(kDefaultTheta), rc.u.value_or(kDefaultU));
}

double surface_theta(const RunConfig& rc) {
  if (rc.u) throw std::invalid_argument("surface takes --umin/--umax, not --u");
  if (rc.a || rc.xi) {
    if (rc.theta) throw std::invalid_argument("give either --theta or --a/--xi, not both");
    if (!rc.a || !rc.xi) throw std::invalid_argument("--a and --xi must be given together");
    return resolve_angle(SlopeParams::from_bertrand(*rc.a, *rc.xi)).theta;
  }
  return rc.theta.value_or(kDefaultTheta);
}

// Explicit bounds are passed through untouched (and rejected downstream if
// they leave the curve's domain); defaults are clipped to it.
Interval v_range(const RunConfig& rc, const SphericalCurve& f, Interval fallback) {
  const Interval dom = f.domain();
  const double lo = rc.vmin.value_or(std::max(fallback.lo, dom.lo));
  const double hi = rc.vmax.value_or(std::min(fallback.hi, dom.hi));
  if (!(lo < hi)) throw std::invalid_argument("empty v range");
  return {lo, hi};
}

std::size_t grid_count(std::optional<std::size_t> n, std::size_t fallback, const char* flag) {
  const std::size_t value = n.value_or(fallback);
  if (value < 2) throw std::invalid_argument(std::string(flag) + " must be at least 2");
  return value;
}

void emit(const RunConfig& rc, const std::string& content, std::ostream& out) {
  if (rc.out.empty()) {
    out << content;
  } else {
    io::write_file(rc.out, content);
  }
}

int cmd_classify(const RunConfig& rc, std::ostream& out) {
  const LVec3 x{rc.vector[0], rc.vector[1], rc.vector[2]};
  if (!is_finite(x)) throw std::invalid_argument("vector components must be finite");
  const CausalClass cc = causal_class(x);
  out << to_string(cc) << ", norm " << io::format_real(lnorm(x));
  if (cc == CausalClass::Timelike && on_sphere(x, Sphere::H2)) out << ", on H2";
  if (cc == CausalClass::Spacelike && on_sphere(x, Sphere::S12)) out << ", on S12";
  out << '\n';
  return kOk;
}

int cmd_bertrand(const RunConfig& rc, std::ostream& out) {
  const SlopeParams sp = bertrand_params(rc);
  const SphericalCurve f = make_curve(rc.curve);
  const Interval vr = v_range(rc, f, {0.0, 2.0});
  const auto grid = num::linspace(vr.lo, vr.hi, grid_count(rc.nv, 64, "--nv"));
  const auto points = sample_synthesized(sp, f, grid);
  emit(rc, io::curve_csv(grid, points), out);
  return kOk;
}

int cmd_surface(const RunConfig& rc, std::ostream& out) {
  const double theta = surface_theta(rc);
  const SphericalCurve f = make_curve(rc.curve);
  const Interval vr = v_range(rc, f, {-1.5, 1.5});
  const Interval ur{rc.umin.value_or(0.5), rc.umax.value_or(std::numbers::e)};
  const SurfacePatch patch = surface_mesh(theta, f, ur, vr, grid_count(rc.nu, 32, "--nu"),
                                          grid_count(rc.nv, 64, "--nv"));
  emit(rc, io::surface_obj(patch), out);
  return kOk;
}

int cmd_evolute(const RunConfig& rc, std::ostream& out) {
  const SphericalCurve f = make_curve(rc.curve);
  const Interval vr = v_range(rc, f, {0.0, 2.0});
  const auto grid = num::linspace(vr.lo, vr.hi, grid_count(rc.nv, 64, "--nv"));
  emit(rc, io::evolute_csv(sample_evolute(f, grid)), out);
  return kOk;
}

std::pair<std::string, double> parse_tolerance(const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("--tolerance expects NAME=VALUE, got '" + item + "'");
  }
  const std::string text = item.substr(eq + 1);
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("bad tolerance value '" + text + "'");
  }
  return {item.substr(0, eq), value};
}

int cmd_verify(const RunConfig& rc, std::ostream& out) {
  verify::Options opts;
  for (const auto& item : rc.tolerances) {
    const auto [name, value] = parse_tolerance(item);
    if (!opts.tolerances.emplace(name, value).second) {
      throw std::invalid_argument("tolerance for '" + name + "' given twice");
    }
  }
  const verify::Report report = verify::run(opts);

  std::ostringstream table;
  table << std::scientific << std::setprecision(3);
  for (const auto& c : report.checks) {
    table << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(36) << c.name << std::right
          << " residual " << c.residual << "  tol " << c.tolerance;
    if (!c.error.empty()) table << "  (" << c.error << ")";
    table << '\n';
  }
  table << std::defaultfloat << (report.overall ? "overall: PASS" : "overall: FAIL") << " ("
        << report.checks.size() << " checks, " << std::fixed << std::setprecision(2)
        << report.elapsed_seconds << " s)\n";
  out << table.str();

  std::string path = rc.report;
  if (path.empty()) path = rc.out.empty() ? "verify_report.json" : rc.out;
  io::write_file(path, verify::to_json(report));
  return report.overall ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Timelike curves in de Sitter 2-space and the Bertrand curves and constant "
               "slope surfaces built from them."};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read key=value defaults from a file");
  app.allow_config_extras(false);

  app.add_option("--curve", rc.curve, "Curve spec, e.g. warped:lambda=2")->capture_default_str();
  app.add_option("--theta", rc.theta, "Surface angle in (0, pi/2]");
  app.add_option("--u", rc.u, "Surface parameter u > 0");
  app.add_option("--a", rc.a, "Bertrand constant a");
  app.add_option("--xi", rc.xi, "Bertrand angle xi");
  app.add_option("--vmin", rc.vmin, "Start of the v range");
  app.add_option("--vmax", rc.vmax, "End of the v range");
  app.add_option("--umin", rc.umin, "Start of the u range (surface)");
  app.add_option("--umax", rc.umax, "End of the u range (surface)");
  app.add_option("--nv", rc.nv, "Points along v");
  app.add_option("--nu", rc.nu, "Points along u");
  app.add_option("--out", rc.out, "Output file (default: stdout)");
  app.add_option("--tolerance", rc.tolerances, "Override a verify tolerance, NAME=VALUE")
      ->take_all();
  app.add_option("--report", rc.report, "Verify report path (default verify_report.json)");

  auto* classify = app.add_subcommand("classify", "Causal character of a vector");
  classify->add_option("vector", rc.vector, "Three coordinates")->expected(3)->required();
  auto* bertrand = app.add_subcommand("bertrand", "Sample the Bertrand curve as CSV");
  auto* surface = app.add_subcommand("surface", "Export the constant slope surface as OBJ");
  auto* evolute = app.add_subcommand("evolute", "Sample the pseudo-spherical evolute as CSV");
  auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
  for (auto* sub : {classify, bertrand, surface, evolute, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::FileError& e) {
    app.exit(e, out, err);
    return kIo;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(rc, out);
    if (*bertrand) return cmd_bertrand(rc, out);
    if (*surface) return cmd_surface(rc, out);
    if (*evolute) return cmd_evolute(rc, out);
    return cmd_verify(rc, out);
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace lgeom::cli
