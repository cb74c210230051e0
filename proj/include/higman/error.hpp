// Error types shared by every higman module.
//
// Domain errors carry an ErrorCode whose name is stable and is printed by
// the command line tool; parse errors are reported separately.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace higman {

  enum class ErrorCode {
    BaseTooSmall,
    BaseMismatch,
    NegativeResult,
    ZeroValue,
    OutOfRange,
    LetterOutOfRange,
    NotPrefixCode,
    NotInCode,
    ChildrenMissing,
    DomainNotPrefixCode,
    NotInDomainCode,
    LengthTooSmall,
    AlphabetMismatch,
    NotInjective,
    NotAClass,
    NotDistinct,
    IndexMismatch,
    ZeroElement,
    NotPlep,
    NotFixedLength,
    RepNotInCode,
    DivisibleIndex,
    UnknownGate,
    EmptyTarget,
    EmptyLanguage,
    CyclicGraph,
    NotTrimmed,
    NotInImageCode,
    ArityMismatch,
    NotSurjective,
    TooLarge,
    TooLong,
  };

  constexpr std::string_view error_name(ErrorCode c) noexcept {
    switch (c) {
      case ErrorCode::BaseTooSmall: return "BaseTooSmall";
      case ErrorCode::BaseMismatch: return "BaseMismatch";
      case ErrorCode::NegativeResult: return "NegativeResult";
      case ErrorCode::ZeroValue: return "ZeroValue";
      case ErrorCode::OutOfRange: return "OutOfRange";
      case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
      case ErrorCode::NotPrefixCode: return "NotPrefixCode";
      case ErrorCode::NotInCode: return "NotInCode";
      case ErrorCode::ChildrenMissing: return "ChildrenMissing";
      case ErrorCode::DomainNotPrefixCode: return "DomainNotPrefixCode";
      case ErrorCode::NotInDomainCode: return "NotInDomainCode";
      case ErrorCode::LengthTooSmall: return "LengthTooSmall";
      case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
      case ErrorCode::NotInjective: return "NotInjective";
      case ErrorCode::NotAClass: return "NotAClass";
      case ErrorCode::NotDistinct: return "NotDistinct";
      case ErrorCode::IndexMismatch: return "IndexMismatch";
      case ErrorCode::ZeroElement: return "ZeroElement";
      case ErrorCode::NotPlep: return "NotPlep";
      case ErrorCode::NotFixedLength: return "NotFixedLength";
      case ErrorCode::RepNotInCode: return "RepNotInCode";
      case ErrorCode::DivisibleIndex: return "DivisibleIndex";
      case ErrorCode::UnknownGate: return "UnknownGate";
      case ErrorCode::EmptyTarget: return "EmptyTarget";
      case ErrorCode::EmptyLanguage: return "EmptyLanguage";
      case ErrorCode::CyclicGraph: return "CyclicGraph";
      case ErrorCode::NotTrimmed: return "NotTrimmed";
      case ErrorCode::NotInImageCode: return "NotInImageCode";
      case ErrorCode::ArityMismatch: return "ArityMismatch";
      case ErrorCode::NotSurjective: return "NotSurjective";
      case ErrorCode::TooLarge: return "TooLarge";
      case ErrorCode::TooLong: return "TooLong";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  // Malformed textual input (tables, formulas, DFA dumps, numbers).
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  namespace detail {
    [[noreturn]] inline void fail(ErrorCode code, std::string const& what) {
      throw Error(code, what);
    }
  }  // namespace detail

}  // namespace higman
