#include "spinc/error.hpp"

namespace spinc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::NotSimplicial: return "not_simplicial";
    case ErrorCode::NotSubcomplex: return "not_subcomplex";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::NotCocycle: return "not_cocycle";
    case ErrorCode::SpaceMismatch: return "space_mismatch";
    case ErrorCode::NotClosed: return "not_closed";
    case ErrorCode::NotOrientable: return "not_orientable";
    case ErrorCode::DegeneratePairing: return "degenerate_pairing";
    case ErrorCode::TwoTorsion: return "two_torsion";
    case ErrorCode::NotDivisible: return "not_divisible";
    case ErrorCode::EmptyTorsor: return "empty_torsor";
    case ErrorCode::NotInImage: return "not_in_image";
    case ErrorCode::HypothesisFailed: return "hypothesis_failed";
    case ErrorCode::IncompatibleLifts: return "incompatible_lifts";
    case ErrorCode::ConsistencyFailure: return "consistency_failure";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace spinc
