#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rect_atg {

enum class Marker : std::uint8_t { kPositive, kNegative };

// "!" for positive, "?" for negative.
char marker_char(Marker m) noexcept;

// Largest level make_template will materialize (n x 2^n cells).
inline constexpr int kMaxTemplateLevel = 24;

// Content-free sign pattern of an n-level rectangle: n rows, 2^n columns.
class PolarityTemplate {
 public:
  int level() const noexcept { return static_cast<int>(rows_.size()); }
  std::size_t width() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
  // Zero-based row and column.
  Marker at(std::size_t row, std::size_t column) const { return rows_.at(row).at(column); }
  const std::vector<Marker>& row(std::size_t r) const { return rows_.at(r); }

  // Rows of space-separated markers, one row per line.
  std::string dump() const;

  friend bool operator==(const PolarityTemplate&, const PolarityTemplate&) = default;

 private:
  friend PolarityTemplate make_template(int level);
  explicit PolarityTemplate(std::vector<std::vector<Marker>> rows) : rows_(std::move(rows)) {}

  std::vector<std::vector<Marker>> rows_;
};

// Builds the template level by level: each step doubles every existing row
// and appends a row of 2^(k-1) positives followed by 2^(k-1) negatives.
// Throws Error(kInvalidLevel) for level <= 0 and Error(kSizeCap) above
// kMaxTemplateLevel.
PolarityTemplate make_template(int level);

// Closed form of the template cell: positive iff bit `row` of `column` is 0.
// Zero-based indices, no materialization, so any level up to 64 is served.
// Throws Error(kIndexOutOfRange).
Marker polarity_at(int row, std::uint64_t column, int level);

}  // namespace rect_atg
