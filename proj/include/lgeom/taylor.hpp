#pragma once

// Truncated Taylor series arithmetic. A Series of order n stores the
// normalized coefficients c[k] = f^(k)(t0) / k! for k = 0..n. Used to get
// exact derivative jets of closed-form curves and of their arc-length
// reparametrizations without finite differencing.

#include <cmath>
#include <cstddef>
#include <vector>

#include "lgeom/lorentz.hpp"

namespace lgeom {

class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order, double c0 = 0.0) : c_(order + 1, 0.0) { c_[0] = c0; }

  /// The identity t0 + e.
  static Series variable(double t0, std::size_t order) {
    Series s(order, t0);
    if (order >= 1) s.c_[1] = 1.0;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  double operator[](std::size_t k) const { return c_[k]; }
  double& operator[](std::size_t k) { return c_[k]; }

  /// k-th derivative at the expansion point.
  double derivative(std::size_t k) const {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return c_[k] * f;
  }

  /// Sum of the series at offset e.
  double eval(double e) const {
    double r = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * e + c_[k];
    return r;
  }

  Series& operator+=(const Series& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Series& operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
  }
  Series& operator+=(double s) {
    c_[0] += s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, double s) { return a *= s; }
  friend Series operator*(double s, Series a) { return a *= s; }
  friend Series operator+(Series a, double s) { return a += s; }

  friend Series operator*(const Series& a, const Series& b) {
    Series r(a.order());
    for (std::size_t k = 0; k <= r.order(); ++k) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
      r.c_[k] = acc;
    }
    return r;
  }

  /// d/de, dropping the top order.
  Series derivative() const {
    Series r(order() == 0 ? 0 : order() - 1);
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) r.c_[k] = c_[k + 1] * static_cast<double>(k + 1);
    return r;
  }

  /// Antiderivative vanishing at e = 0, raising the order by one.
  Series integral() const {
    Series r(order() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k + 1] = c_[k] / static_cast<double>(k + 1);
    return r;
  }

  Series truncated(std::size_t order) const {
    Series r(order);
    for (std::size_t k = 0; k <= order && k < c_.size(); ++k) r.c_[k] = c_[k];
    return r;
  }

 private:
  std::vector<double> c_;
};

namespace series_detail {

// For g = G(a) with G' = H and H' = sign * G, the coefficients obey
// k g_k = sum_j j a_j h_{k-j} and k h_k = sign * sum_j j a_j g_{k-j}.
inline void paired(const Series& a, double g0, double h0, double sign, Series& g, Series& h) {
  g = Series(a.order(), g0);
  h = Series(a.order(), h0);
  for (std::size_t k = 1; k <= a.order(); ++k) {
    double sg = 0.0;
    double sh = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      sg += static_cast<double>(j) * a[j] * h[k - j];
      sh += static_cast<double>(j) * a[j] * g[k - j];
    }
    g[k] = sg / static_cast<double>(k);
    h[k] = sign * sh / static_cast<double>(k);
  }
}

}  // namespace series_detail

inline void sin_cos(const Series& a, Series& s, Series& c) {
  series_detail::paired(a, std::sin(a[0]), std::cos(a[0]), -1.0, s, c);
}

inline void sinh_cosh(const Series& a, Series& s, Series& c) {
  series_detail::paired(a, std::sinh(a[0]), std::cosh(a[0]), 1.0, s, c);
}

/// a^p for a[0] > 0.
inline Series pow(const Series& a, double p) {
  Series b(a.order(), std::pow(a[0], p));
  for (std::size_t k = 1; k <= a.order(); ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      acc += ((p + 1.0) * static_cast<double>(j) - static_cast<double>(k)) * a[j] * b[k - j];
    }
    b[k] = acc / (static_cast<double>(k) * a[0]);
  }
  return b;
}

/// F(x0 + delta(e)) given the series F about x0 and delta with delta[0] == 0.
inline Series compose(const Series& outer, const Series& delta) {
  Series r(delta.order(), outer[outer.order()]);
  for (std::size_t k = outer.order(); k-- > 0;) {
    r = r * delta;
    r += outer[k];
  }
  return r;
}

struct SeriesVec {
  Series x1, x2, x3;

  LVec3 coefficient(std::size_t k) const { return {x1[k], x2[k], x3[k]}; }
  LVec3 derivative(std::size_t k) const {
    return {x1.derivative(k), x2.derivative(k), x3.derivative(k)};
  }
  SeriesVec derivative() const { return {x1.derivative(), x2.derivative(), x3.derivative()}; }
};

inline Series minkowski_inner(const SeriesVec& a, const SeriesVec& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3;
}

inline SeriesVec compose(const SeriesVec& outer, const Series& delta) {
  return {compose(outer.x1, delta), compose(outer.x2, delta), compose(outer.x3, delta)};
}

}  // namespace lgeom
