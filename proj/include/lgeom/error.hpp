#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgeom {

enum class ErrorKind {
  InvalidArgument,
  NonFinite,
  LightlikeInput,
  DegeneratePlane,
  OrderUnavailable,
  OutOfDomain,
  NullVelocityEncountered,
  LightlikeTangent,
  VanishingCurvature,
  LightlikeNormal,
  NullDarboux,
  NotTimelike,
  OutOfRange,
  NotUnitSpeed,
  NotOnSphere,
  NonConvergence,
  SignConflict,
  NotBertrand,
  WrongCausalCase,
  InvalidRange,
  NoCompatibleAngle,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Thrown by every geometric operation that cannot honour its precondition.
/// The kind is stable and is what callers (and the CLI exit-code mapping)
/// dispatch on; the message is for humans.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GeometryError(kind, what);
}

}  // namespace lgeom
