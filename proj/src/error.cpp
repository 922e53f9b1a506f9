#include "rect_atg/error.hpp"

#include <utility>

namespace rect_atg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kDuplicatePredicate: return "DuplicatePredicate";
    case ErrorCode::kEmptyClause: return "EmptyClause";
    case ErrorCode::kInvalidLevel: return "InvalidLevel";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kTooManyAtoms: return "TooManyAtoms";
    case ErrorCode::kProductTooLarge: return "ProductTooLarge";
    case ErrorCode::kEmptyHypothesis: return "EmptyHypothesis";
    case ErrorCode::kUnnumberedAtom: return "UnnumberedAtom";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
  }
  return "Unknown";
}

bool is_resource_error(ErrorCode code) {
  return code == ErrorCode::kSizeCap || code == ErrorCode::kTooManyAtoms ||
         code == ErrorCode::kProductTooLarge;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, std::string expected, std::string_view input)
    : Error(ErrorCode::kSyntax,
            "expected " + expected + " at position " + std::to_string(position) + " in \"" +
                std::string(input) + "\""),
      position_(position),
      expected_(std::move(expected)) {}

DuplicatePredicateError::DuplicatePredicateError(std::string symbol, std::size_t first,
                                                 std::size_t second)
    : Error(ErrorCode::kDuplicatePredicate,
            "symbol '" + symbol + "' used by literals " + std::to_string(first) + " and " +
                std::to_string(second)),
      symbol_(std::move(symbol)),
      first_(first),
      second_(second) {}

}  // namespace rect_atg
