#include "adjspec/errors.hpp"

namespace adjspec {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::LoopArc: return "LoopArc";
    case Errc::DuplicateArc: return "DuplicateArc";
    case Errc::SymmetricArcPair: return "SymmetricArcPair";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::InvalidPath: return "InvalidPath";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::MissingValue: return "MissingValue";
    case Errc::NotPositionFunction: return "NotPositionFunction";
    case Errc::EmptySet: return "EmptySet";
    case Errc::MissingPhi: return "MissingPhi";
    case Errc::MissingDirections: return "MissingDirections";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSemiAdapted: return "NotSemiAdapted";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotInRange: return "NotInRange";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::BadParams: return "BadParams";
    case Errc::BadD: return "BadD";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ResourceCap: return "ResourceCap";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace adjspec
