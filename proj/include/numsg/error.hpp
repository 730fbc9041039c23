#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

  enum class ErrorKind {
    InvalidArgument,
    ParseError,
    InvalidGapList,
    InfiniteComplement,
    NotClosed,
    EmptySemigroupComplement,
    GenusTooSmall,
    MalformedGapSet,
    NotPFSemigroup,
    NotPFShape,
    PasteConditionViolated,
    PreconditionUnverified,
  };

  std::string_view error_name(ErrorKind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above; the
  // CLI prints error_name() verbatim.
  class SemigroupError : public std::runtime_error {
   public:
    SemigroupError(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::string_view name() const noexcept {
      return error_name(_kind);
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] inline void raise(ErrorKind kind, std::string const& what) {
    throw SemigroupError(kind, what);
  }

}  // namespace numsg
