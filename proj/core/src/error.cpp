#include "chordiv/error.hpp"

namespace chordiv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedGenerator: return "unsupported-generator";
    case ErrorCode::kInvalidDimension: return "invalid-dimension";
    case ErrorCode::kDegenerateRestriction: return "degenerate-restriction";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kGradientRequired: return "gradient-required";
    case ErrorCode::kInvalidChordParams: return "invalid-chord-params";
    case ErrorCode::kInvalidParameter: return "invalid-parameter";
    case ErrorCode::kInvalidSkew: return "invalid-skew";
    case ErrorCode::kWitnessNotFound: return "witness-not-found";
    case ErrorCode::kBracket: return "bracket";
    case ErrorCode::kUnknownDivergence: return "unknown-divergence";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kUsage: return "usage";
  }
  return "unknown";
}

void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace chordiv
