#pragma once

// Small numerical toolkit shared by the geometry modules: adaptive Simpson
// quadrature, central difference stencils, bracketing root finding and
// monotone cubic resampling.

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "lgeom/error.hpp"
#include "lgeom/lorentz.hpp"

namespace lgeom::num {

inline constexpr double kQuadTol = 1e-10;
inline constexpr int kQuadMaxDepth = 40;

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const LVec3& v) { return max_abs(v); }

namespace detail {

template <class T, class F>
T simpson_step(const F& f, double a, double b, const T& fa, const T& fm, const T& fb,
               const T& whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T sum = left + right;
  const T delta = sum - whole;
  if (magnitude(delta) <= 15.0 * tol) return sum + delta / 15.0;
  if (depth <= 0) {
    fail(ErrorKind::NonConvergence, "adaptive Simpson exceeded its maximum depth");
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson with Richardson correction. T is double or LVec3; the
/// absolute tolerance is measured in the max-abs norm. b < a is allowed and
/// yields the negated integral.
template <class F>
auto adaptive_simpson(const F& f, double a, double b, double tol = kQuadTol,
                      int max_depth = kQuadMaxDepth) -> decltype(f(a)) {
  using T = decltype(f(a));
  if (a == b) return T{} * 0.0;
  const double m = 0.5 * (a + b);
  const T fa = f(a);
  const T fm = f(m);
  const T fb = f(b);
  const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Integrates across the given interior breakpoints (sorted, inside (a, b)),
/// splitting the tolerance in proportion to each piece's width.
template <class F>
auto adaptive_simpson_piecewise(const F& f, double a, double b, std::span<const double> breaks,
                                double tol = kQuadTol) -> decltype(f(a)) {
  using T = decltype(f(a));
  if (breaks.empty()) return adaptive_simpson(f, a, b, tol);
  const double sign = b >= a ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  T total = T{} * 0.0;
  double left = lo;
  auto piece = [&](double l, double r) {
    if (r > l) total += adaptive_simpson(f, l, r, tol * (r - l) / (hi - lo));
  };
  for (double br : breaks) {
    if (br <= left || br >= hi) continue;
    piece(left, br);
    left = br;
  }
  piece(left, hi);
  return sign * total;
}

/// Fixed 8-point Gauss-Legendre rule on [a, b]; exact for polynomials of
/// degree 15. Used on short panels where the integrand is smooth.
template <class F>
auto gauss_legendre8(const F& f, double a, double b) -> decltype(f(a)) {
  static constexpr double x[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                  0.9602898564975363};
  static constexpr double w[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                  0.1012285362903763};
  const double m = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  auto sum = w[0] * (f(m - r * x[0]) + f(m + r * x[0]));
  for (int i = 1; i < 4; ++i) sum += w[i] * (f(m - r * x[i]) + f(m + r * x[i]));
  return r * sum;
}

// Central difference stencils of width 5 (first and second derivative
// O(h^4), third derivative O(h^2)) and the plain 3-point first derivative.
template <class F>
auto diff1_3pt(const F& f, double x, double h) -> decltype(f(x)) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
auto diff1_5pt(const F& f, double x, double h) -> decltype(f(x)) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

template <class F>
auto diff2_5pt(const F& f, double x, double h) -> decltype(f(x)) {
  return (-1.0 * f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) -
          f(x + 2 * h)) /
         (12.0 * h * h);
}

template <class F>
auto diff3_5pt(const F& f, double x, double h) -> decltype(f(x)) {
  return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) / (2.0 * h * h * h);
}

/// Bisection on a sign change of f over [lo, hi]. Requires f(lo)*f(hi) <= 0.
double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol = 1e-14,
              int max_iter = 200);

/// Scans [lo, hi] in n cells for sign changes of f and refines each by
/// bisection. Returns the roots in increasing order.
std::vector<double> find_roots(const std::function<double(double)>& f, double lo, double hi,
                               int n, double xtol = 1e-14);

/// Fritsch-Carlson monotone cubic (PCHIP) interpolant of scalar data on a
/// strictly increasing abscissa.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double operator()(double t) const;

 private:
  std::vector<double> x_, y_, d_;
};

/// Uniform grid of n points from lo to hi inclusive; the last point is hi
/// exactly.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace lgeom::num
