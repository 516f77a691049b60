#pragma once

// Space curves in Minkowski 3-space: derivative jets from analytic or sampled
// sources, arc length, the Frenet apparatus in its three causal cases, Darboux
// indicatrices, and helix / Bertrand diagnostics.

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "lgeom/lorentz.hpp"
#include "lgeom/numerics.hpp"
#include "lgeom/parallel.hpp"

namespace lgeom {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double t, double slack = 0.0) const { return t >= lo - slack && t <= hi + slack; }
};

/// Value and derivatives of orders 0..order at parameter t. Entries above
/// `order` are zero and must not be read.
struct Jet {
  double t = 0.0;
  int order = 0;
  std::array<LVec3, 5> d{};
};

/// An immutable parametrized curve. Analytic sources supply exact jets up to
/// their declared order; sampled sources hold a uniform table and
/// differentiate it numerically, exposing at most third derivatives.
class ParamCurve {
 public:
  using Evaluator = std::function<Jet(double t, int order)>;

  static constexpr int kMaxJetOrder = 4;
  static constexpr int kMaxSampledOrder = 3;

  static ParamCurve analytic(Interval domain, Evaluator eval, int max_order = kMaxJetOrder);

  /// Uniform table: samples[i] is the point at t0 + i*h. Needs >= 6 samples.
  static ParamCurve sampled(double t0, double h, std::vector<LVec3> samples);

  /// Non-uniform table, resampled onto n uniform points by per-coordinate
  /// monotone cubic interpolation.
  static ParamCurve resampled(std::span<const double> t, std::span<const LVec3> points,
                              std::size_t n);

  /// Throws OrderUnavailable and OutOfDomain.
  Jet jet_at(double t, int order) const;
  LVec3 point(double t) const { return jet_at(t, 0).d[0]; }

  const Interval& domain() const { return domain_; }
  int max_order() const { return max_order_; }
  bool is_sampled() const { return static_cast<bool>(table_); }
  /// Grid step of a sampled source; zero for analytic sources.
  double step() const;
  /// Interior grid nodes of a sampled source inside (a, b), where the
  /// numerical jets switch stencil; empty for analytic sources.
  std::vector<double> breakpoints(double a, double b) const;
  /// Grid nodes of a sampled source, skipping `margin` nodes at each end.
  std::vector<double> nodes(std::size_t margin = 0) const;

 private:
  struct Table;

  ParamCurve() = default;
  Jet sampled_jet(double t, int order) const;

  Interval domain_;
  int max_order_ = 0;
  Evaluator eval_;
  std::shared_ptr<const Table> table_;
};

/// Integral of g(t) over [a, b] for a quantity living on `curve`. Analytic
/// sources use adaptive Simpson; sampled sources use an 8-point Gauss rule on
/// every grid cell, inside which the interpolated jets are polynomial.
template <class G>
auto integrate_along(const ParamCurve& curve, const G& g, double a, double b,
                     double tol = num::kQuadTol) -> decltype(g(a)) {
  if (!curve.is_sampled()) return num::adaptive_simpson(g, a, b, tol);
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  auto total = g(lo) * 0.0;
  double left = lo;
  for (double br : curve.breakpoints(lo, hi)) {
    total += num::gauss_legendre8(g, left, br);
    left = br;
  }
  total += num::gauss_legendre8(g, left, hi);
  return b >= a ? total : -1.0 * total;
}

/// Integral of |alpha'(t)| from t0 to t1 (adaptive Simpson, absolute tolerance
/// 1e-10). Throws NullVelocityEncountered on a lightlike quadrature node.
double arc_length(const ParamCurve& curve, double t0, double t1);

enum class FrenetCase { TimelikeCurve, SpacelikeTimelikeNormal, SpacelikeSpacelikeNormal };

const char* to_string(FrenetCase c) noexcept;

struct FrenetData {
  double t = 0.0;
  LVec3 T, N, B;
  double kappa = 0.0;
  double tau = 0.0;
  /// |alpha'(t)|, i.e. ds/dt.
  double speed = 0.0;
  FrenetCase kind = FrenetCase::TimelikeCurve;
};

/// Frenet frame, curvature and torsion at a general parameter. Curvature and
/// torsion use the cross-product formulas
///   kappa = |a' x a''| / |<a',a'>|^(3/2),  tau = det(a',a'',a''') / |a' x a''|^2.
/// Throws LightlikeTangent, VanishingCurvature and LightlikeNormal.
FrenetData frenet_apparatus(const ParamCurve& curve, double t);
FrenetData frenet_from_jet(const Jet& jet);

std::vector<FrenetData> frenet_sweep(const ParamCurve& curve, std::span<const double> grid,
                                     Exec exec = Exec::Parallel);

/// Arc-length derivatives (T', N', B') predicted by the Frenet equations:
///   timelike curve:          T' = k N,  N' = k T + t B,   B' = -t N
///   timelike normal:         T' = k N,  N' = k T + t B,   B' = t N
///   spacelike normal:        T' = k N,  N' = -k T + t B,  B' = t N
std::array<LVec3, 3> frenet_rates(const FrenetData& fd);

/// The normalized Darboux vector. D is tau*T + kappa*B for timelike curves,
/// -tau*T + kappa*B with spacelike normal and tau*T - kappa*B with timelike
/// normal. Throws NullDarboux.
LVec3 darboux_vector(const FrenetData& fd);
LVec3 darboux_indicatrix(const FrenetData& fd);

struct HelixResult {
  bool is_helix = false;
  double ratio = 0.0;   // mean tau/kappa
  double spread = 0.0;  // max - min of tau/kappa
};

HelixResult helix_test(const ParamCurve& curve, std::span<const double> grid,
                       Exec exec = Exec::Parallel);
HelixResult helix_test(std::span<const FrenetData> frames);

inline constexpr double kBertrandTol = 1e-6;

struct BertrandFit {
  double A = 0.0;
  double B = 0.0;
  double residual = 0.0;  // max |A kappa + B tau - 1| over the grid
  bool non_unique = false;
  bool is_bertrand = false;
};

/// Least squares for A kappa + B tau = 1. When the normal system is singular
/// (kappa and tau proportional on the grid) the minimum-norm solution is
/// returned with non_unique set.
BertrandFit bertrand_fit(const ParamCurve& curve, std::span<const double> grid,
                         Exec exec = Exec::Parallel);
BertrandFit bertrand_fit(std::span<const FrenetData> frames);

}  // namespace lgeom
