#include "lconvex/polyomino.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <tuple>

#include "lconvex/error.hpp"

namespace lconvex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotLConvex: return "NotLConvex";
    case ErrorKind::NotFerrer: return "NotFerrer";
    case ErrorKind::NoRealization: return "NoRealization";
    case ErrorKind::AmbiguousRealization: return "AmbiguousRealization";
    case ErrorKind::RNotDescending: return "RNotDescending";
    case ErrorKind::DegenerateSizes: return "DegenerateSizes";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::UnknownStyle: return "UnknownStyle";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

std::uint64_t run_mask(int from, int to_exclusive) {
  const int len = to_exclusive - from;
  if (len <= 0) return 0;
  const std::uint64_t ones = len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
  return ones << from;
}

// Mask bits form a single contiguous run (or are empty).
bool is_interval(std::uint64_t mask) {
  if (mask == 0) return true;
  const std::uint64_t shifted = mask >> std::countr_zero(mask);
  return (shifted & (shifted + 1)) == 0;
}

}  // namespace

Polyomino Polyomino::from_cells(std::span<const Cell> cells) {
  if (cells.empty()) throw Error(ErrorKind::EmptyInput, "no cells given");
  int min_x = cells[0].x, min_y = cells[0].y, max_x = cells[0].x, max_y = cells[0].y;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
    max_x = std::max(max_x, c.x);
    max_y = std::max(max_y, c.y);
  }
  if (max_x - min_x + 1 > kMaxWidth) {
    throw Error(ErrorKind::TooLarge, "width exceeds " + std::to_string(kMaxWidth));
  }
  std::vector<std::uint64_t> rows(max_y - min_y + 1, 0);
  for (const Cell& c : cells) rows[c.y - min_y] |= std::uint64_t{1} << (c.x - min_x);
  return from_rows(std::move(rows));
}

Polyomino Polyomino::from_cells(std::span<const std::pair<int, int>> cells) {
  std::vector<Cell> cs;
  cs.reserve(cells.size());
  for (auto [x, y] : cells) cs.push_back({x, y});
  return from_cells(std::span<const Cell>(cs));
}

Polyomino Polyomino::from_rows(std::vector<std::uint64_t> rows) {
  // Trim empty rows at both ends and shift columns to start at 0.
  auto first = std::find_if(rows.begin(), rows.end(), [](auto r) { return r != 0; });
  if (first == rows.end()) throw Error(ErrorKind::EmptyInput, "no cells given");
  auto last = std::find_if(rows.rbegin(), rows.rend(), [](auto r) { return r != 0; }).base();
  std::vector<std::uint64_t> trimmed(first, last);
  std::uint64_t all = 0;
  for (auto r : trimmed) all |= r;
  const int shift = std::countr_zero(all);
  for (auto& r : trimmed) r >>= shift;
  all >>= shift;

  Polyomino p;
  p.width_ = std::bit_width(all);
  p.height_ = static_cast<int>(trimmed.size());
  p.rows_ = std::move(trimmed);

  // Connectivity: flood fill over row masks.
  std::vector<std::uint64_t> seen(p.height_, 0);
  int y0 = 0;
  while (p.rows_[y0] == 0) ++y0;
  seen[y0] = std::uint64_t{1} << std::countr_zero(p.rows_[y0]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < p.height_; ++y) {
      std::uint64_t grow = seen[y] | (seen[y] << 1) | (seen[y] >> 1);
      if (y > 0) grow |= seen[y - 1];
      if (y + 1 < p.height_) grow |= seen[y + 1];
      grow &= p.rows_[y];
      if (grow != seen[y]) {
        seen[y] = grow;
        changed = true;
      }
    }
  }
  for (int y = 0; y < p.height_; ++y) {
    if (seen[y] != p.rows_[y]) {
      Cell inside{std::countr_zero(seen[y0]), y0};
      Cell outside{std::countr_zero(p.rows_[y] & ~seen[y]), y};
      throw Error(ErrorKind::Disconnected,
                  "cells " + cell_str(inside) + " and " + cell_str(outside) +
                      " lie in different components (normalized coordinates)");
    }
  }
  return p;
}

Polyomino Polyomino::rectangle(int width, int height) {
  if (width <= 0 || height <= 0) throw Error(ErrorKind::EmptyInput, "empty rectangle");
  if (width > kMaxWidth) throw Error(ErrorKind::TooLarge, "rectangle too wide");
  return from_rows(std::vector<std::uint64_t>(height, run_mask(0, width)));
}

Polyomino Polyomino::ferrer(std::span<const int> widths_top_to_bottom) {
  std::vector<std::uint64_t> rows;
  for (auto it = widths_top_to_bottom.rbegin(); it != widths_top_to_bottom.rend(); ++it) {
    if (*it <= 0) throw Error(ErrorKind::EmptyInput, "Ferrer row of non-positive width");
    if (*it > kMaxWidth) throw Error(ErrorKind::TooLarge, "Ferrer row too wide");
    rows.push_back(run_mask(0, *it));
  }
  return from_rows(std::move(rows));
}

std::size_t Polyomino::cell_count() const noexcept {
  std::size_t n = 0;
  for (auto r : rows_) n += std::popcount(r);
  return n;
}

std::vector<Cell> Polyomino::cells() const {
  std::vector<Cell> out;
  for (int x = 0; x < width_; ++x)
    for (int y = 0; y < height_; ++y)
      if (contains(x, y)) out.push_back({x, y});
  return out;
}

bool is_row_convex(const Polyomino& p) {
  return std::all_of(p.rows().begin(), p.rows().end(), is_interval);
}

bool is_column_convex(const Polyomino& p) {
  for (int x = 0; x < p.width(); ++x) {
    int state = 0;  // 0 before the column run, 1 inside, 2 after
    for (int y = 0; y < p.height(); ++y) {
      const bool in = p.contains(x, y);
      if (in && state == 2) return false;
      if (in) state = 1;
      else if (state == 1) state = 2;
    }
  }
  return true;
}

bool is_convex(const Polyomino& p) { return is_row_convex(p) && is_column_convex(p); }

namespace {

bool horizontal_segment(const Polyomino& p, int y, int xa, int xb) {
  if (xa > xb) std::swap(xa, xb);
  const std::uint64_t need = run_mask(xa, xb + 1);
  return (p.row_mask(y) & need) == need;
}

bool vertical_segment(const Polyomino& p, int x, int ya, int yb) {
  if (ya > yb) std::swap(ya, yb);
  for (int y = ya; y <= yb; ++y)
    if (!p.contains(x, y)) return false;
  return true;
}

}  // namespace

bool is_l_convex(const Polyomino& p) {
  if (!is_convex(p)) return false;
  const auto cs = p.cells();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const Cell a = cs[i], b = cs[j];
      if (a.y == b.y) {
        if (!horizontal_segment(p, a.y, a.x, b.x)) return false;
        continue;
      }
      if (a.x == b.x) {
        if (!vertical_segment(p, a.x, a.y, b.y)) return false;
        continue;
      }
      // Turn at (b.x, a.y) or at (a.x, b.y).
      const bool via_first = horizontal_segment(p, a.y, a.x, b.x) && vertical_segment(p, b.x, a.y, b.y);
      if (via_first) continue;
      const bool via_second = vertical_segment(p, a.x, a.y, b.y) && horizontal_segment(p, b.y, a.x, b.x);
      if (!via_second) return false;
    }
  }
  return true;
}

std::vector<MaximalRectangle> maximal_rectangles_any(const Polyomino& p) {
  std::vector<MaximalRectangle> out;
  const auto& rows = p.rows();
  for (int y0 = 0; y0 < p.height(); ++y0) {
    std::uint64_t band = rows[y0];
    for (int y1 = y0; y1 < p.height() && band != 0; ++y1) {
      if (y1 > y0) band &= rows[y1];
      std::uint64_t rest = band;
      while (rest != 0) {
        const int x0 = std::countr_zero(rest);
        const int len = std::countr_one(rest >> x0);
        const std::uint64_t run = run_mask(x0, x0 + len);
        rest &= ~run;
        const bool grows_down = y0 > 0 && (rows[y0 - 1] & run) == run;
        const bool grows_up = y1 + 1 < p.height() && (rows[y1 + 1] & run) == run;
        if (!grows_down && !grows_up) out.push_back({{x0, y0}, len, y1 - y0 + 1});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MaximalRectangle& a, const MaximalRectangle& b) {
    return std::tie(a.width, a.height, a.lower_left) < std::tie(b.width, b.height, b.lower_left);
  });
  return out;
}

std::vector<MaximalRectangle> maximal_rectangles(const Polyomino& p) {
  if (!is_l_convex(p)) throw Error(ErrorKind::NotLConvex, "maximal_rectangles requires an L-convex polyomino");
  auto rects = maximal_rectangles_any(p);
  for (std::size_t i = 0; i + 1 < rects.size(); ++i) {
    const auto& a = rects[i];
    const auto& b = rects[i + 1];
    // widths strictly increase, heights strictly decrease
    if (a.width == b.width || a.height <= b.height) {
      inconsistency("maximal rectangles " + std::to_string(a.width) + "x" + std::to_string(a.height) +
                    " and " + std::to_string(b.width) + "x" + std::to_string(b.height) +
                    " violate unique occurrence");
    }
  }
  return rects;
}

Polyomino transpose(const Polyomino& p) {
  if (p.height() > Polyomino::kMaxWidth) throw Error(ErrorKind::TooLarge, "transpose too wide");
  std::vector<std::uint64_t> rows(p.width(), 0);
  for (int y = 0; y < p.height(); ++y)
    for (int x = 0; x < p.width(); ++x)
      if (p.contains(x, y)) rows[x] |= std::uint64_t{1} << y;
  return Polyomino::from_rows(std::move(rows));
}

std::string key(const Polyomino& p) {
  std::ostringstream os;
  os << p.width() << 'x' << p.height() << ':' << std::hex;
  for (std::size_t y = 0; y < p.rows().size(); ++y) {
    if (y) os << '.';
    os << p.rows()[y];
  }
  return os.str();
}

}  // namespace lconvex
