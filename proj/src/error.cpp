#include "lgeom/error.hpp"

namespace lgeom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::LightlikeInput: return "LightlikeInput";
    case ErrorKind::DegeneratePlane: return "DegeneratePlane";
    case ErrorKind::OrderUnavailable: return "OrderUnavailable";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NullVelocityEncountered: return "NullVelocityEncountered";
    case ErrorKind::LightlikeTangent: return "LightlikeTangent";
    case ErrorKind::VanishingCurvature: return "VanishingCurvature";
    case ErrorKind::LightlikeNormal: return "LightlikeNormal";
    case ErrorKind::NullDarboux: return "NullDarboux";
    case ErrorKind::NotTimelike: return "NotTimelike";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotUnitSpeed: return "NotUnitSpeed";
    case ErrorKind::NotOnSphere: return "NotOnSphere";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::SignConflict: return "SignConflict";
    case ErrorKind::NotBertrand: return "NotBertrand";
    case ErrorKind::WrongCausalCase: return "WrongCausalCase";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::NoCompatibleAngle: return "NoCompatibleAngle";
  }
  return "Unknown";
}

}  // namespace lgeom
