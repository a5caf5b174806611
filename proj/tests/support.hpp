#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "lconvex/hibi.hpp"
#include "lconvex/polyomino.hpp"
#include "lconvex/projection.hpp"

namespace lconvex::testing {

inline Polyomino from_pairs(const std::vector<std::pair<int, int>>& cells) {
  return Polyomino::from_cells(std::span<const std::pair<int, int>>(cells));
}

inline Polyomino from_projections(std::vector<int> h, std::vector<int> v) {
  return reconstruct_l_convex(ProjectionPair{std::move(h), std::move(v)});
}

inline Polyomino ferrer(std::vector<int> rows_top_to_bottom) {
  return Polyomino::ferrer(rows_top_to_bottom);
}

// L-convex, with five maximal rectangles.
inline Polyomino five_rectangles() { return from_projections({1, 1, 2, 4, 7, 7, 4, 4, 3, 1}, {2, 5, 7, 10, 6, 2, 2}); }

inline Polyomino skew_a() { return from_projections({2, 2, 3, 5, 2}, {1, 2, 5, 5, 1}); }

inline Polyomino skew_b() { return from_projections({1, 2, 3, 5, 2}, {1, 2, 5, 4, 1}); }

// Rows bottom to top: {1,2}, {-1..3}, {0,1,2}, {1,2}, {1}.
inline Polyomino four_step() {
  return from_pairs({{1, 0}, {2, 0}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}, {3, 1},
                     {0, 2}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}});
}

inline Polyomino three_covers() { return ferrer({5, 3, 3, 2, 1}); }

inline Polyomino staircase_5321() { return ferrer({5, 3, 2, 1}); }

// Two overlapping bands: an m x s row band starting at height a and a t x n
// column band starting at x = b.
inline Polyomino cross(int m, int n, int s, int t, int a, int b) {
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if ((y >= a && y < a + s) || (x >= b && x < b + t)) cells.emplace_back(x, y);
  return from_pairs(cells);
}

// Random subset of an m x n box, then its largest connected component.
inline std::vector<std::pair<int, int>> random_cells(std::mt19937& rng, int m, int n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if (keep(rng)) cells.emplace_back(x, y);
  if (cells.empty()) cells.emplace_back(0, 0);
  std::set<std::pair<int, int>> left(cells.begin(), cells.end());
  std::vector<std::pair<int, int>> best;
  while (!left.empty()) {
    std::vector<std::pair<int, int>> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto [x, y] = comp[i];
      for (auto next : {std::pair{x + 1, y}, std::pair{x - 1, y}, std::pair{x, y + 1}, std::pair{x, y - 1}}) {
        if (left.erase(next)) comp.push_back(next);
      }
    }
    if (comp.size() > best.size()) best = std::move(comp);
  }
  return best;
}

// Random L-convex polyomino: a row-convex stack whose row intervals all
// contain a common column, filtered until L-convex.
inline Polyomino random_l_convex(std::mt19937& rng, int max_m, int max_n) {
  std::uniform_int_distribution<int> height(1, max_n);
  for (;;) {
    const int n = height(rng);
    const int spine = std::uniform_int_distribution<int>(0, max_m - 1)(rng);
    std::vector<std::pair<int, int>> cells;
    for (int y = 0; y < n; ++y) {
      const int lo = std::uniform_int_distribution<int>(0, spine)(rng);
      const int hi = std::uniform_int_distribution<int>(spine, max_m - 1)(rng);
      for (int x = lo; x <= hi; ++x) cells.emplace_back(x, y);
    }
    Polyomino p = from_pairs(cells);
    if (is_l_convex(p)) return p;
  }
}

inline Polyomino random_ferrer(std::mt19937& rng, int max_m, int max_n) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  std::vector<int> rows(n);
  for (int& r : rows) r = std::uniform_int_distribution<int>(1, max_m)(rng);
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return ferrer(rows);
}

// Every strictly order-reversing map with value at -inf at most `bound`,
// by plain recursion over a linear extension.
inline std::vector<OrderReversingMap> all_maps(const Poset& q, int bound) {
  std::vector<OrderReversingMap> out;
  const auto& order = q.linear_extension();
  std::vector<int> values(q.size(), 0);
  auto rec = [&](auto&& self, int idx, int bottom) -> void {
    if (idx < 0) {
      out.push_back({bottom, values});
      return;
    }
    const int e = order[idx];
    int hi = bottom - 1;
    for (int o = 0; o < q.size(); ++o)
      if (q.less(o, e) && values[o] > 0) hi = std::min(hi, values[o] - 1);
    int lo = 1;
    for (int o = 0; o < q.size(); ++o)
      if (q.less(e, o)) lo = std::max(lo, values[o] + 1);
    for (int v = lo; v <= hi; ++v) {
      values[e] = v;
      self(self, idx - 1, bottom);
    }
    values[e] = 0;
  };
  // Fill from the top of the linear extension down, so every element above
  // is set before its value range is computed.
  for (int bottom = 1; bottom <= bound; ++bottom) rec(rec, q.size() - 1, bottom);
  return out;
}

// Minimal elements under the pairwise dominance test.
inline std::vector<OrderReversingMap> minimal_pairwise(const Poset& q, const std::vector<OrderReversingMap>& maps) {
  std::vector<OrderReversingMap> out;
  for (const auto& mu : maps) {
    bool minimal = true;
    for (const auto& nu : maps) {
      if (nu == mu) continue;
      if (dominated_by(q, nu, mu)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lconvex::testing
