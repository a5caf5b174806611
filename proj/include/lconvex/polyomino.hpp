#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lconvex {

// A unit cell, identified by its lower-left lattice corner. x grows to the
// right, y grows upward.
struct Cell {
  int x = 0;
  int y = 0;
  auto operator<=>(const Cell&) const = default;
};

// Finite, edge-connected, normalized set of cells (min x = min y = 0).
// Cells are stored as one bitmask per row, so the width is capped at 64.
class Polyomino {
 public:
  static constexpr int kMaxWidth = 64;

  // Throws EmptyInput, Disconnected, TooLarge.
  static Polyomino from_cells(std::span<const Cell> cells);
  static Polyomino from_cells(std::span<const std::pair<int, int>> cells);
  // rows[y] is the bitmask of occupied columns of row y (bottom row first).
  static Polyomino from_rows(std::vector<std::uint64_t> rows);

  static Polyomino rectangle(int width, int height);
  // Rows listed top to bottom, each left-justified with the given width.
  static Polyomino ferrer(std::span<const int> widths_top_to_bottom);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t cell_count() const noexcept;

  bool contains(int x, int y) const noexcept {
    return y >= 0 && y < height_ && x >= 0 && x < width_ && ((rows_[y] >> x) & 1U);
  }
  std::uint64_t row_mask(int y) const { return rows_.at(y); }
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

  // Sorted by (x, y).
  std::vector<Cell> cells() const;

  bool is_rectangle() const noexcept { return cell_count() == std::size_t(width_) * height_; }

  bool operator==(const Polyomino&) const = default;

 private:
  Polyomino() = default;

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint64_t> rows_;
};

bool is_row_convex(const Polyomino& p);
bool is_column_convex(const Polyomino& p);
bool is_convex(const Polyomino& p);

// Every ordered pair of cells is joined by a cell path inside P with at most
// one change of direction.
bool is_l_convex(const Polyomino& p);

struct MaximalRectangle {
  Cell lower_left;
  int width = 0;
  int height = 0;
  auto operator<=>(const MaximalRectangle&) const = default;
};

// All maximal rectangular subpolyominoes of an L-convex P, sorted by width
// ascending. Throws NotLConvex; throws InternalInconsistency if two maximal
// rectangles share a size or a width/height.
std::vector<MaximalRectangle> maximal_rectangles(const Polyomino& p);

// Same enumeration without the L-convexity guard or uniqueness check, sorted
// by (width, height, position).
std::vector<MaximalRectangle> maximal_rectangles_any(const Polyomino& p);

Polyomino transpose(const Polyomino& p);

// Stable identifier: "<w>x<h>:" followed by hex row masks bottom to top.
std::string key(const Polyomino& p);

}  // namespace lconvex
