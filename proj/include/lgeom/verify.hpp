#pragma once

// The self-verification suite behind `lgeom verify`: every identity and
// worked example the library implements, each reduced to a residual and a
// tolerance.

#include <map>
#include <string>
#include <vector>

#include "lgeom/parallel.hpp"

namespace lgeom::verify {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Set when the check threw instead of producing a residual.
  std::string error;
};

struct Report {
  std::vector<CheckResult> checks;
  bool overall = false;
  std::map<std::string, double> tolerances;
  std::map<std::string, long> grids;
  double elapsed_seconds = 0.0;
};

struct Options {
  /// Per-check tolerance overrides. Unknown names are rejected by run().
  std::map<std::string, double> tolerances;
  Exec exec = Exec::Parallel;
};

/// Stable check names in execution order.
std::vector<std::string> check_names();

double default_tolerance(const std::string& name);

/// Throws std::invalid_argument for an override naming no check.
Report run(const Options& options = {});

std::string to_json(const Report& report);

}  // namespace lgeom::verify
