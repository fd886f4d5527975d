#include "elasto/error.hpp"

namespace elasto {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::NonFiniteInput: return "NonFiniteInput";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::DegenerateModuli: return "DegenerateModuli";
    case Errc::SideMismatch: return "SideMismatch";
    case Errc::TooCloseToSurface: return "TooCloseToSurface";
    case Errc::DoubleDegenerate: return "DoubleDegenerate";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::NoBracket: return "NoBracket";
    case Errc::ResonanceNotAchieved: return "ResonanceNotAchieved";
    case Errc::TuningFailed: return "TuningFailed";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::SourceInsideShell: return "SourceInsideShell";
    case Errc::OnInterface: return "OnInterface";
  }
  return "Unknown";
}

}  // namespace elasto
