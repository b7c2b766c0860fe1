#include "torfan/error.hpp"

namespace torfan {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OverlappingCones: return "OverlappingCones";
    case ErrorKind::NoConeContains: return "NoConeContains";
    case ErrorKind::RelationFails: return "RelationFails";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::DivisibilityFails: return "DivisibilityFails";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::ChopTooDeep: return "ChopTooDeep";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NewtonDiverged: return "NewtonDiverged";
    case ErrorKind::MirrorMismatch: return "MirrorMismatch";
    case ErrorKind::HalfSpaceFan: return "HalfSpaceFan";
    case ErrorKind::SeparationFailed: return "SeparationFailed";
    case ErrorKind::ToleranceExceeded: return "ToleranceExceeded";
    case ErrorKind::ContourHitsSpectrum: return "ContourHitsSpectrum";
    case ErrorKind::IdempotencyFailed: return "IdempotencyFailed";
    case ErrorKind::ClusterAmbiguous: return "ClusterAmbiguous";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::DerivativesCollide: return "DerivativesCollide";
    case ErrorKind::ClusteringAmbiguous: return "ClusteringAmbiguous";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace torfan
