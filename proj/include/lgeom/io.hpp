#pragma once

// Text serialization: 17-significant-digit numbers, curve CSV, surface OBJ.

#include <span>
#include <stdexcept>
#include <string>

#include "lgeom/bertrand.hpp"
#include "lgeom/desitter.hpp"

namespace lgeom::io {

/// Filesystem failure while reading or writing an output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.17g, with negative zero printed as 0.
std::string format_real(double x);

/// Header `v,x1,x2,x3`, one row per point.
std::string curve_csv(std::span<const double> v, std::span<const LVec3> points);

/// Header `v,x1,x2,x3,kg`.
std::string evolute_csv(std::span<const EvoluteSample> samples);

/// Wavefront OBJ with nu*nv vertices and (nu-1)*(nv-1) quads, row-major.
std::string surface_obj(const SurfacePatch& patch);

/// Writes `content` to `path`, replacing any existing file. Throws IoError.
void write_file(const std::string& path, const std::string& content);

}  // namespace lgeom::io
