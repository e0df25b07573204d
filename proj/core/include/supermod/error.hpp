#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supermod {

enum class Errc {
  kDuplicateElement,
  kCycleDetected,
  kUnknownElement,
  kEmptySubset,
  kProductTooLarge,
  kNotALattice,
  kElementOutOfCarrier,
  kCarrierMismatch,
  kCarrierTooLarge,
  kPreconditionViolated,
  kEmptySet,
  kInvalidArgument,
  kParseError,
  kIoError,
  kNonSurjectiveProjection,
  kMissingPayoff,
  kDuplicateProfile,
  kInfeasibleProfile,
  kEmptyPlayerSet,
  kSpecOutOfRange,
  kInternalContradiction,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace supermod
