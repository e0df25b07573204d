#include "supermod/error.hpp"

namespace supermod {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDuplicateElement: return "DuplicateElement";
    case Errc::kCycleDetected: return "CycleDetected";
    case Errc::kUnknownElement: return "UnknownElement";
    case Errc::kEmptySubset: return "EmptySubset";
    case Errc::kProductTooLarge: return "ProductTooLarge";
    case Errc::kNotALattice: return "NotALattice";
    case Errc::kElementOutOfCarrier: return "ElementOutOfCarrier";
    case Errc::kCarrierMismatch: return "CarrierMismatch";
    case Errc::kCarrierTooLarge: return "CarrierTooLarge";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kEmptySet: return "EmptySet";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParseError: return "ParseError";
    case Errc::kIoError: return "IoError";
    case Errc::kNonSurjectiveProjection: return "NonSurjectiveProjection";
    case Errc::kMissingPayoff: return "MissingPayoff";
    case Errc::kDuplicateProfile: return "DuplicateProfile";
    case Errc::kInfeasibleProfile: return "InfeasibleProfile";
    case Errc::kEmptyPlayerSet: return "EmptyPlayerSet";
    case Errc::kSpecOutOfRange: return "SpecOutOfRange";
    case Errc::kInternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace supermod
