#include "rect_atg/polarity_template.hpp"

#include <string>

#include "rect_atg/error.hpp"

namespace rect_atg {

char marker_char(Marker m) noexcept { return m == Marker::kPositive ? '!' : '?'; }

std::string PolarityTemplate::dump() const {
  std::string out;
  out.reserve(rows_.size() * (width() * 2 + 1));
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != 0) out += ' ';
      out += marker_char(row[j]);
    }
    out += '\n';
  }
  return out;
}

PolarityTemplate make_template(int level) {
  if (level <= 0) {
    throw Error(ErrorCode::kInvalidLevel, "template level must be positive, got " + std::to_string(level));
  }
  if (level > kMaxTemplateLevel) {
    throw Error(ErrorCode::kSizeCap, "template level " + std::to_string(level) +
                                         " exceeds materialization cap " +
                                         std::to_string(kMaxTemplateLevel));
  }

  std::vector<std::vector<Marker>> current{{Marker::kPositive, Marker::kNegative}};
  for (int k = 2; k <= level; ++k) {
    std::vector<std::vector<Marker>> extended;
    extended.reserve(static_cast<std::size_t>(k));
    for (const auto& row : current) {
      std::vector<Marker> doubled;
      doubled.reserve(row.size() * 2);
      doubled.insert(doubled.end(), row.begin(), row.end());
      doubled.insert(doubled.end(), row.begin(), row.end());
      extended.push_back(std::move(doubled));
    }
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<Marker> new_row(half, Marker::kPositive);
    new_row.resize(2 * half, Marker::kNegative);
    extended.push_back(std::move(new_row));
    current = std::move(extended);
  }
  return PolarityTemplate(std::move(current));
}

Marker polarity_at(int row, std::uint64_t column, int level) {
  if (level <= 0 || level > 64) {
    throw Error(ErrorCode::kIndexOutOfRange, "level " + std::to_string(level) + " not in 1..64");
  }
  if (row < 0 || row >= level) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "row " + std::to_string(row) + " not in 0.." + std::to_string(level - 1));
  }
  if (level < 64 && column >> level != 0) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "column " + std::to_string(column) + " outside a level-" + std::to_string(level) +
                    " template");
  }
  return (column >> row) & 1U ? Marker::kNegative : Marker::kPositive;
}

}  // namespace rect_atg
