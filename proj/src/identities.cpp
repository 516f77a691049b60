#include "lgeom/identities.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lgeom {

double CrossResiduals::worst() const {
  return std::max({triple_product, antisymmetry, double_cross, orthogonality, lagrange});
}

CrossResiduals cross_residuals(const Triple& t) {
  const auto& [x, y, z] = t;
  const double s = std::max({1.0, max_abs(x), max_abs(y), max_abs(z)});
  const double s2 = s * s;
  const LVec3 xy = lcross(x, y);
  CrossResiduals r;
  r.triple_product = std::abs(minkowski_inner(xy, z) - det3(x, y, z)) / (s2 * s);
  r.antisymmetry = max_abs_diff(xy, -lcross(y, x)) / s2;
  const LVec3 expected = minkowski_inner(y, z) * x - minkowski_inner(x, z) * y;
  r.double_cross = max_abs_diff(lcross(xy, z), expected) / (s2 * s);
  r.orthogonality =
      std::max(std::abs(minkowski_inner(xy, x)), std::abs(minkowski_inner(xy, y))) / (s2 * s);
  const double lhs = minkowski_inner(xy, xy);
  const double xyi = minkowski_inner(x, y);
  const double rhs = -minkowski_inner(x, x) * minkowski_inner(y, y) + xyi * xyi;
  r.lagrange = std::abs(lhs - rhs) / (s2 * s2);
  return r;
}

CrossResiduals cross_residuals(std::span<const Triple> batch, Exec exec) {
  std::vector<CrossResiduals> each(batch.size());
  for_each_index(exec, batch.size(), [&](std::size_t i) { each[i] = cross_residuals(batch[i]); });
  CrossResiduals out;
  for (const auto& r : each) {
    out.triple_product = std::max(out.triple_product, r.triple_product);
    out.antisymmetry = std::max(out.antisymmetry, r.antisymmetry);
    out.double_cross = std::max(out.double_cross, r.double_cross);
    out.orthogonality = std::max(out.orthogonality, r.orthogonality);
    out.lagrange = std::max(out.lagrange, r.lagrange);
  }
  return out;
}

}  // namespace lgeom
