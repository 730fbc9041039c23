#include "numsg/error.hpp"

namespace numsg {

  std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::InvalidArgument:
        return "InvalidArgument";
      case ErrorKind::ParseError:
        return "ParseError";
      case ErrorKind::InvalidGapList:
        return "InvalidGapList";
      case ErrorKind::InfiniteComplement:
        return "InfiniteComplement";
      case ErrorKind::NotClosed:
        return "NotClosed";
      case ErrorKind::EmptySemigroupComplement:
        return "EmptySemigroupComplement";
      case ErrorKind::GenusTooSmall:
        return "GenusTooSmall";
      case ErrorKind::MalformedGapSet:
        return "MalformedGapSet";
      case ErrorKind::NotPFSemigroup:
        return "NotPFSemigroup";
      case ErrorKind::NotPFShape:
        return "NotPFShape";
      case ErrorKind::PasteConditionViolated:
        return "PasteConditionViolated";
      case ErrorKind::PreconditionUnverified:
        return "PreconditionUnverified";
    }
    return "Unknown";
  }

}  // namespace numsg
