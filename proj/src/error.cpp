#include "scb/error.hpp"

namespace scb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientTooLarge: return "AmbientTooLarge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::AsymmetricConnectingSet: return "AsymmetricConnectingSet";
    case ErrorCode::NumericalInconsistency: return "NumericalInconsistency";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoFeasibleAssignment: return "NoFeasibleAssignment";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::TooFewEigenvalues: return "TooFewEigenvalues";
    case ErrorCode::FixtureNotFound: return "FixtureNotFound";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace scb
