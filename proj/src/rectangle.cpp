#include "rect_atg/rectangle.hpp"

#include <string>

#include "rect_atg/error.hpp"
#include "rect_atg/polarity_template.hpp"

namespace rect_atg {

namespace {

void check_cap(const GenerationSet& g, std::size_t max_level) {
  if (g.size() > max_level || g.size() >= 63) {
    throw Error(ErrorCode::kSizeCap, std::to_string(g.size()) +
                                         " generators exceed the materialization cap of " +
                                         std::to_string(max_level));
  }
}

void check_column(const Rectangle& r, std::size_t column) {
  if (column >= r.length()) {
    throw Error(ErrorCode::kIndexOutOfRange, "column " + std::to_string(column) +
                                                 " outside a rectangle of length " +
                                                 std::to_string(r.length()));
  }
}

}  // namespace

const Literal& Rectangle::at(std::size_t row, std::size_t column) const {
  if (row >= height()) {
    throw Error(ErrorCode::kIndexOutOfRange, "row " + std::to_string(row) +
                                                 " outside a rectangle of height " +
                                                 std::to_string(height()));
  }
  return this->column(column)[row];
}

std::span<const Literal> Rectangle::column(std::size_t column) const {
  check_column(*this, column);
  return std::span<const Literal>(cells_).subspan(column * height(), height());
}

Clause Rectangle::clause(std::size_t column) const {
  auto cells = this->column(column);
  return Clause(std::vector<Literal>(cells.begin(), cells.end()));
}

ClauseSet Rectangle::clauses() const {
  ClauseSet out;
  out.reserve(length());
  for (std::size_t j = 0; j < length(); ++j) out.push_back(clause(j));
  return out;
}

Rectangle construct_naive(const GenerationSet& generators, std::size_t max_level) {
  check_cap(generators, max_level);
  const std::size_t n = generators.size();

  // Row-major while growing; rows[i] is the i-th row of the current level.
  std::vector<std::vector<Literal>> rows;
  for (std::size_t level = 1; level <= n; ++level) {
    for (auto& row : rows) {
      row.reserve(row.size() * 2);
      const std::size_t width = row.size();
      for (std::size_t j = 0; j < width; ++j) row.push_back(row[j]);
    }
    const Literal& x = generators[level - 1];
    const std::size_t half = std::size_t{1} << (level - 1);
    std::vector<Literal> new_row(half, x);
    new_row.resize(2 * half, negate_literal(x));
    rows.push_back(std::move(new_row));
  }

  const std::size_t length = std::size_t{1} << n;
  std::vector<Literal> cells;
  cells.reserve(n * length);
  for (std::size_t j = 0; j < length; ++j) {
    for (std::size_t i = 0; i < n; ++i) cells.push_back(rows[i][j]);
  }
  return Rectangle(generators, std::move(cells));
}

Rectangle construct_from_template(const GenerationSet& generators, std::size_t max_level) {
  check_cap(generators, max_level);
  const std::size_t n = generators.size();
  const PolarityTemplate tmpl = make_template(static_cast<int>(n));

  std::vector<Literal> complements;
  complements.reserve(n);
  for (const Literal& l : generators) complements.push_back(negate_literal(l));

  std::vector<Literal> cells;
  cells.reserve(n * tmpl.width());
  for (std::size_t j = 0; j < tmpl.width(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      cells.push_back(tmpl.at(i, j) != Marker::kNegative ? generators[i] : complements[i]);
    }
  }
  return Rectangle(generators, std::move(cells));
}

ClauseSet remove_clauses(const Rectangle& r, const std::set<std::size_t>& columns) {
  for (std::size_t c : columns) check_column(r, c);
  ClauseSet out;
  out.reserve(r.length() - columns.size());
  for (std::size_t j = 0; j < r.length(); ++j) {
    if (!columns.contains(j)) out.push_back(r.clause(j));
  }
  return out;
}

}  // namespace rect_atg
