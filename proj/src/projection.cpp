#include "lconvex/projection.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "lconvex/error.hpp"

namespace lconvex {

ProjectionPair projections(const Polyomino& p) {
  ProjectionPair pp;
  pp.horizontal.reserve(p.height());
  for (int y = p.height() - 1; y >= 0; --y) pp.horizontal.push_back(std::popcount(p.row_mask(y)));
  pp.vertical.assign(p.width(), 0);
  for (int y = 0; y < p.height(); ++y)
    for (int x = 0; x < p.width(); ++x)
      if (p.contains(x, y)) ++pp.vertical[x];
  return pp;
}

bool is_unimodal(std::span<const int> values) {
  std::size_t i = 1;
  while (i < values.size() && values[i - 1] <= values[i]) ++i;
  while (i < values.size() && values[i - 1] >= values[i]) ++i;
  return i >= values.size();
}

bool is_ferrer(const Polyomino& p) {
  int previous = 0;
  for (int y = 0; y < p.height(); ++y) {
    const std::uint64_t row = p.row_mask(y);
    const int w = std::popcount(row);
    if (std::countr_one(row) != w) return false;  // not left-justified
    if (w < previous) return false;               // wider below than above
    previous = w;
  }
  return true;
}

Polyomino ferrer_project(const Polyomino& p) {
  if (!is_l_convex(p)) throw Error(ErrorKind::NotLConvex, "ferrer_project requires an L-convex polyomino");
  auto pp = projections(p);
  std::stable_sort(pp.horizontal.begin(), pp.horizontal.end(), std::greater<>());
  std::stable_sort(pp.vertical.begin(), pp.vertical.end(), std::greater<>());
  Polyomino out = Polyomino::ferrer(pp.horizontal);
  if (projections(out).vertical != pp.vertical) {
    inconsistency("Ferrer diagram built from sorted rows does not carry the sorted column projection");
  }
  return out;
}

namespace {

struct Reconstruction {
  const std::vector<int>& rows;  // top to bottom
  const std::vector<int>& cols;
  int m;
  int n;
  std::vector<int> col_sum;
  std::vector<int> col_state;  // 0 untouched, 1 open, 2 closed
  std::vector<int> offset;
  std::vector<Polyomino> found;

  void search(int i, int prev_lo, int prev_hi) {
    if (found.size() >= 2) return;
    if (i == n) {
      for (int j = 0; j < m; ++j)
        if (col_sum[j] != cols[j]) return;
      std::vector<std::uint64_t> masks(n);
      for (int r = 0; r < n; ++r) {
        const int w = rows[r];
        const std::uint64_t run = (w >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << w) - 1)) << offset[r];
        masks[n - 1 - r] = run;
      }
      Polyomino cand = Polyomino::from_rows(std::move(masks));
      if (cand.width() == m && is_l_convex(cand)) found.push_back(std::move(cand));
      return;
    }
    const int w = rows[i];
    const int remaining = n - i;
    for (int o = 0; o + w <= m; ++o) {
      const int lo = o, hi = o + w - 1;
      if (i > 0 && (hi < prev_lo || lo > prev_hi)) continue;
      bool ok = true;
      for (int j = 0; j < m && ok; ++j) {
        const bool in = j >= lo && j <= hi;
        if (in) {
          ok = col_state[j] != 2 && col_sum[j] + 1 <= cols[j] && cols[j] - col_sum[j] <= remaining;
        } else if (col_state[j] == 1) {
          ok = col_sum[j] == cols[j];
        } else if (col_state[j] == 0) {
          ok = cols[j] <= remaining - 1;
        }
      }
      if (!ok) continue;
      std::vector<int> saved = col_state;
      for (int j = 0; j < m; ++j) {
        const bool in = j >= lo && j <= hi;
        if (in) {
          ++col_sum[j];
          col_state[j] = 1;
        } else if (col_state[j] == 1) {
          col_state[j] = 2;
        }
      }
      offset[i] = o;
      search(i + 1, lo, hi);
      for (int j = lo; j <= hi; ++j) --col_sum[j];
      col_state = std::move(saved);
    }
  }
};

}  // namespace

Polyomino reconstruct_l_convex(const ProjectionPair& pp) {
  const auto& rows = pp.horizontal;
  const auto& cols = pp.vertical;
  if (rows.empty() || cols.empty()) throw Error(ErrorKind::NoRealization, "empty projection vector");
  const int n = static_cast<int>(rows.size());
  const int m = static_cast<int>(cols.size());
  if (m > Polyomino::kMaxWidth) throw Error(ErrorKind::TooLarge, "too many columns");
  for (int h : rows)
    if (h <= 0 || h > m) throw Error(ErrorKind::NoRealization, "row count out of range");
  for (int v : cols)
    if (v <= 0 || v > n) throw Error(ErrorKind::NoRealization, "column count out of range");
  const long long sum_rows = std::accumulate(rows.begin(), rows.end(), 0LL);
  const long long sum_cols = std::accumulate(cols.begin(), cols.end(), 0LL);
  if (sum_rows != sum_cols) {
    throw Error(ErrorKind::NoRealization,
                "row sum " + std::to_string(sum_rows) + " differs from column sum " + std::to_string(sum_cols));
  }
  if (!is_unimodal(rows) || !is_unimodal(cols)) {
    throw Error(ErrorKind::NoRealization, "projections of an L-convex polyomino are unimodal");
  }

  Reconstruction r{rows, cols, m, n, std::vector<int>(m, 0), std::vector<int>(m, 0), std::vector<int>(n, 0), {}};
  r.search(0, 0, m - 1);
  if (r.found.empty()) throw Error(ErrorKind::NoRealization, "no L-convex polyomino has these projections");
  if (r.found.size() > 1) {
    throw Error(ErrorKind::AmbiguousRealization, "two L-convex polyominoes share these projections: " +
                                                     key(r.found[0]) + " and " + key(r.found[1]));
  }
  return std::move(r.found.front());
}

}  // namespace lconvex
