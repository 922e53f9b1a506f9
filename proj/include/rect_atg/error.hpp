#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rect_atg {

enum class ErrorCode {
  kSyntax,
  kEmptySet,
  kDuplicatePredicate,
  kEmptyClause,
  kInvalidLevel,
  kIndexOutOfRange,
  kSizeCap,
  kTooManyAtoms,
  kProductTooLarge,
  kEmptyHypothesis,
  kUnnumberedAtom,
  kSchemaMismatch,
  kMalformedRecord,
};

std::string_view to_string(ErrorCode code);

// True for the errors caused by a resource bound rather than bad input.
bool is_resource_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected, std::string_view input);

  // Byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class DuplicatePredicateError : public Error {
 public:
  // Indices are 1-based generation-set positions.
  DuplicatePredicateError(std::string symbol, std::size_t first, std::size_t second);

  const std::string& symbol() const noexcept { return symbol_; }
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::string symbol_;
  std::size_t first_;
  std::size_t second_;
};

}  // namespace rect_atg
