#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfcat {

enum class ErrorCode {
  NonManifoldGluing,
  SelfFoldedTriangle,
  NoMarkedPointOnBoundary,
  TooSmallSurface,
  BoundaryArcFlip,
  UnknownArc,
  UnknownArrow,
  InvalidString,
  ZeroStringStatus,
  OnPeak,
  NotOnPeak,
  InjectiveModule,
  ProjectiveModule,
  ZeroParameter,
  NoExactStructureFound,
  ZeroObject,
  MixedTriangulations,
  BandArgument,
  NoCrossingPatternFound,
  NoSelfCrossingPatternFound,
  FrontierExceeded,
  MalformedSpec,
  MalformedInput,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace surfcat
