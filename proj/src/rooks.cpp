#include "lconvex/rooks.hpp"

#include <algorithm>
#include <functional>

#include "lconvex/error.hpp"
#include "lconvex/projection.hpp"

namespace lconvex {

namespace {

struct RookSearch {
  std::vector<Cell> cells;
  std::vector<char> row_used;
  std::vector<char> col_used;

  explicit RookSearch(const Polyomino& p)
      : cells(p.cells()), row_used(p.height(), 0), col_used(p.width(), 0) {}

  std::uint64_t count(std::size_t from, int k) {
    if (k == 0) return 1;
    std::uint64_t total = 0;
    for (std::size_t i = from; i + k <= cells.size(); ++i) {
      const Cell c = cells[i];
      if (row_used[c.y] || col_used[c.x]) continue;
      row_used[c.y] = col_used[c.x] = 1;
      total += count(i + 1, k - 1);
      row_used[c.y] = col_used[c.x] = 0;
    }
    return total;
  }

  bool exists(std::size_t from, int k) {
    if (k == 0) return true;
    for (std::size_t i = from; i + k <= cells.size(); ++i) {
      const Cell c = cells[i];
      if (row_used[c.y] || col_used[c.x]) continue;
      row_used[c.y] = col_used[c.x] = 1;
      const bool ok = exists(i + 1, k - 1);
      row_used[c.y] = col_used[c.x] = 0;
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

BigInt rook_count(const Polyomino& p, int k) {
  if (k < 0) return 0;
  RookSearch s(p);
  return BigInt(s.count(0, k));
}

std::vector<BigInt> rook_counts(const Polyomino& p) {
  std::vector<BigInt> out;
  RookSearch s(p);
  for (int k = 0;; ++k) {
    const std::uint64_t c = s.count(0, k);
    if (c == 0) break;
    out.emplace_back(c);
  }
  return out;
}

int rook_number(const Polyomino& p) {
  RookSearch s(p);
  for (int k = std::min(p.width(), p.height()); k > 0; --k)
    if (s.exists(0, k)) return k;
  return 0;
}

BigInt ferrer_rook_count(std::span<const int> rows, int r) {
  if (!std::is_sorted(rows.begin(), rows.end(), std::greater<>())) {
    throw Error(ErrorKind::RNotDescending, "Ferrer row widths must be weakly decreasing");
  }
  if (r < 0 || r > static_cast<int>(rows.size())) return 0;
  BigInt product = 1;
  for (int i = 1; i <= r; ++i) {
    const int factor = rows[r - i] - (i - 1);
    if (factor <= 0) return 0;
    product *= factor;
  }
  return product;
}

namespace {

int min_plus_index(std::span<const int> descending, int bound) {
  int best = bound;
  for (std::size_t j = 0; j < descending.size(); ++j) best = std::min(best, descending[j] + static_cast<int>(j));
  return best;
}

}  // namespace

Regularity regularity_report(const Polyomino& p) {
  const Polyomino star = ferrer_project(p);
  const ProjectionPair pp = projections(star);
  Regularity reg;
  reg.row_form = min_plus_index(pp.horizontal, star.height());
  reg.column_form = min_plus_index(pp.vertical, star.width());
  if (reg.row_form != reg.column_form) {
    inconsistency("row form " + std::to_string(reg.row_form) + " and column form " +
                  std::to_string(reg.column_form) + " of the regularity disagree");
  }
  reg.value = reg.row_form;
  return reg;
}

int regularity(const Polyomino& p) { return regularity_report(p).value; }

}  // namespace lconvex
