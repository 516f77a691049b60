#pragma once

// Residuals of the algebraic identities satisfied by the Lorentzian cross
// product, evaluated over batches of vector triples.

#include <array>
#include <span>

#include "lgeom/lorentz.hpp"
#include "lgeom/parallel.hpp"

namespace lgeom {

using Triple = std::array<LVec3, 3>;

/// Worst relative residual of each identity over a batch. Each residual is
/// divided by the matching power of max(1, largest coordinate of the triple).
struct CrossResiduals {
  double triple_product = 0.0;  // <x cross y, z> = det(x, y, z)
  double antisymmetry = 0.0;    // x cross y = -(y cross x)
  double double_cross = 0.0;    // (x cross y) cross z = -<x,z> y + <y,z> x
  double orthogonality = 0.0;   // <x cross y, x> = <x cross y, y> = 0
  double lagrange = 0.0;        // <x cross y, x cross y> = -<x,x><y,y> + <x,y>^2

  double worst() const;
};

CrossResiduals cross_residuals(const Triple& t);
CrossResiduals cross_residuals(std::span<const Triple> batch, Exec exec = Exec::Parallel);

}  // namespace lgeom
