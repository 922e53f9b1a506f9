#pragma once

#include <cstddef>
#include <set>
#include <span>

#include "rect_atg/logic.hpp"
#include "rect_atg/parser.hpp"

namespace rect_atg {

// Default cap on the number of generators a rectangle is materialized for.
inline constexpr std::size_t kDefaultMaxLevel = 20;

// An n x 2^n grid of literals. Row i only ever holds generator i or its
// complement; column j is clause j. The grid is stored column-major, so the
// clause view is a span over the same cells.
class Rectangle {
 public:
  const GenerationSet& generators() const noexcept { return generators_; }
  std::size_t height() const noexcept { return generators_.size(); }
  std::size_t length() const noexcept { return std::size_t{1} << height(); }

  // Zero-based. Throws Error(kIndexOutOfRange).
  const Literal& at(std::size_t row, std::size_t column) const;
  std::span<const Literal> column(std::size_t column) const;

  Clause clause(std::size_t column) const;
  ClauseSet clauses() const;

  friend bool operator==(const Rectangle& a, const Rectangle& b) {
    return a.generators_ == b.generators_ && a.cells_ == b.cells_;
  }

 private:
  friend Rectangle construct_naive(const GenerationSet&, std::size_t);
  friend Rectangle construct_from_template(const GenerationSet&, std::size_t);

  Rectangle(GenerationSet generators, std::vector<Literal> cells)
      : generators_(std::move(generators)), cells_(std::move(cells)) {}

  GenerationSet generators_;
  std::vector<Literal> cells_;
};

// Level-by-level doubling: level i is two copies of level i-1 side by side
// over a new row of 2^(i-1) copies of x_i followed by 2^(i-1) of its
// complement. Throws Error(kSizeCap) if the set is larger than max_level.
Rectangle construct_naive(const GenerationSet& generators, std::size_t max_level = kDefaultMaxLevel);

// Fills the polarity template column by column: "!" takes the generator,
// "?" its complement.
Rectangle construct_from_template(const GenerationSet& generators,
                                  std::size_t max_level = kDefaultMaxLevel);

// Remaining columns in original order. Throws Error(kIndexOutOfRange).
ClauseSet remove_clauses(const Rectangle& r, const std::set<std::size_t>& columns);

}  // namespace rect_atg
