#pragma once

// Text syntax for generation literals.
//
//   literal  := [ "~" | "¬" ] atom
//   atom     := ident [ "(" term { "," term } ")" ] | term "=" term
//   term     := ident [ "(" term { "," term } ")" ]
//   ident    := [A-Za-z][A-Za-z0-9_]*
//
// A bare identifier in atom position is a proposition. Whether a bare
// identifier in term position is a variable or a constant depends on the
// VarStyle. Whitespace between tokens is ignored.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rect_atg/logic.hpp"

namespace rect_atg {

enum class VarStyle {
  // Leading uppercase letter marks a variable (TPTP convention).
  kUpper,
  // Leading letter in u..z marks a variable; anything else is a constant.
  kLower,
};

std::string_view to_string(VarStyle style);
// Accepts "upper" / "lower"; throws std::invalid_argument otherwise.
VarStyle parse_var_style(std::string_view text);

bool is_variable_name(std::string_view name, VarStyle style);

// Ordered literals with pairwise distinct predicate symbols; position i is
// row i of the rectangle built from it. Only obtainable through validation.
class GenerationSet {
 public:
  std::span<const Literal> literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  auto begin() const noexcept { return literals_.begin(); }
  auto end() const noexcept { return literals_.end(); }

  friend bool operator==(const GenerationSet&, const GenerationSet&) = default;

 private:
  friend GenerationSet validate_generation_set(std::vector<Literal> literals);
  explicit GenerationSet(std::vector<Literal> literals) : literals_(std::move(literals)) {}

  std::vector<Literal> literals_;
};

// Throws SyntaxError on malformed input (including stacked negation).
Literal parse_literal(std::string_view text, VarStyle style = VarStyle::kUpper);

// Literals separated by ',', ';' or newlines. Separators inside argument
// lists do not split. Throws SyntaxError, Error(kEmptySet) or
// DuplicatePredicateError.
GenerationSet parse_generation_set(std::string_view text, VarStyle style = VarStyle::kUpper);

// Throws Error(kEmptySet) for no literals and DuplicatePredicateError when
// two literals share a proposition or predicate symbol ("=" included).
GenerationSet validate_generation_set(std::vector<Literal> literals);

}  // namespace rect_atg
