#pragma once

#include <stdexcept>
#include <string>

namespace elasto {

enum class Errc {
  InvalidArgument = 1,
  OrderTooLarge,
  OrderTooSmall,
  NonFiniteInput,
  ZeroArgument,
  InvalidOrder,
  DegreeTooLarge,
  DegenerateModuli,
  SideMismatch,
  TooCloseToSurface,
  DoubleDegenerate,
  SingularSystem,
  NoBracket,
  ResonanceNotAchieved,
  TuningFailed,
  ModeMismatch,
  SourceInsideShell,
  OnInterface,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace elasto
