#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordiv {

enum class ErrorCode {
  kUnsupportedGenerator,
  kInvalidDimension,
  kDegenerateRestriction,
  kDomain,
  kShape,
  kGradientRequired,
  kInvalidChordParams,
  kInvalidParameter,
  kInvalidSkew,
  kWitnessNotFound,
  kBracket,
  kUnknownDivergence,
  kInfeasible,
  kParse,
  kIo,
  kUsage,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// front ends can map them onto exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace chordiv
