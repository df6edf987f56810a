#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adjspec {

enum class Errc {
  LoopArc,
  DuplicateArc,
  SymmetricArcPair,
  UnknownVertex,
  DuplicateVertex,
  InvalidPath,
  Disconnected,
  EmptyGraph,
  MissingValue,
  NotPositionFunction,
  EmptySet,
  MissingPhi,
  MissingDirections,
  DimensionMismatch,
  NotSemiAdapted,
  NotHermitian,
  NotInRange,
  SingularSystem,
  NotAutomorphism,
  BadParams,
  BadD,
  ArityMismatch,
  ResourceCap,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message names the offending vertex, arc or parameter.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace adjspec
