#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torfan {

// Every failure the library reports carries one of these kinds. The CLI
// renders the kind name verbatim and maps it to an exit status.
enum class ErrorKind {
  RingMismatch,
  InfiniteDimensional,
  NotSquare,
  NonConvergence,
  DimensionMismatch,
  OverlappingCones,
  NoConeContains,
  RelationFails,
  InvalidFan,
  Empty,
  Unbounded,
  DivisibilityFails,
  Inconsistent,
  ChopTooDeep,
  NotAFace,
  NotMonotone,
  NewtonDiverged,
  MirrorMismatch,
  HalfSpaceFan,
  SeparationFailed,
  ToleranceExceeded,
  ContourHitsSpectrum,
  IdempotencyFailed,
  ClusterAmbiguous,
  NotSemisimple,
  DerivativesCollide,
  ClusteringAmbiguous,
  InvalidArgument,
  ParseError,
  ValidationError,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace torfan
