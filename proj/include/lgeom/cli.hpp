#pragma once

#include <iosfwd>

namespace lgeom::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kIo = 3,
  kDomain = 4,
};

/// Entry point of the `lgeom` tool. Never throws; every failure is reported
/// on `err` and mapped to an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lgeom::cli
