#include "lconvex/enumerate.hpp"

#include <string>

#include "lconvex/error.hpp"

namespace lconvex {

namespace {

void check_bound(int value, int limit, const char* what) {
  if (value < 1 || value > limit) {
    throw Error(ErrorKind::BoundTooLarge,
                std::string(what) + " must lie in 1.." + std::to_string(limit) + ", got " + std::to_string(value));
  }
}

// Partitions with parts <= max_part and at most max_parts parts, in
// lexicographic order of the part sequence.
void partitions(int max_part, int max_parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (!current.empty()) out.push_back(current);
  if (static_cast<int>(current.size()) == max_parts) return;
  for (int part = 1; part <= max_part; ++part) {
    current.push_back(part);
    partitions(part, max_parts, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Polyomino> enumerate_ferrer(int max_m, int max_n) {
  check_bound(max_m, 8, "max_m");
  check_bound(max_n, 8, "max_n");
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  partitions(max_m, max_n, current, parts);
  std::vector<Polyomino> out;
  out.reserve(parts.size());
  for (const auto& rows : parts) out.push_back(Polyomino::ferrer(rows));
  return out;
}

std::vector<Polyomino> enumerate_ferrer_semiperimeter(int max_semiperimeter) {
  check_bound(max_semiperimeter, 16, "max_semiperimeter");
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  partitions(max_semiperimeter - 1, max_semiperimeter - 1, current, parts);
  std::vector<Polyomino> out;
  for (const auto& rows : parts)
    if (rows.front() + static_cast<int>(rows.size()) <= max_semiperimeter) out.push_back(Polyomino::ferrer(rows));
  return out;
}

namespace {

struct LConvexSearch {
  int max_m;
  int height;
  std::vector<std::uint64_t> rows;
  std::vector<Polyomino>* out;

  // state per column: 0 untouched, 1 in the previous row, 2 finished.
  void extend(std::vector<int>& state) {
    const int y = static_cast<int>(rows.size());
    if (y == height) {
      std::uint64_t used = 0;
      for (auto r : rows) used |= r;
      if ((used & 1U) == 0) return;  // translated copy of another result
      Polyomino p = Polyomino::from_rows(rows);
      if (is_l_convex(p)) out->push_back(std::move(p));
      return;
    }
    const std::uint64_t prev = y == 0 ? 0 : rows.back();
    for (int lo = 0; lo < max_m; ++lo) {
      for (int hi = lo; hi < max_m; ++hi) {
        if (state[hi] == 2) break;
        const std::uint64_t mask = ((std::uint64_t{2} << hi) - 1) & ~((std::uint64_t{1} << lo) - 1);
        if (y > 0 && (mask & prev) == 0) continue;
        std::vector<int> next = state;
        for (int x = 0; x < max_m; ++x) {
          const bool in = (mask >> x) & 1U;
          if (in) next[x] = 1;
          else if (state[x] == 1) next[x] = 2;
        }
        rows.push_back(mask);
        extend(next);
        rows.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Polyomino> enumerate_l_convex(int max_m, int max_n) {
  check_bound(max_m, 6, "max_m");
  check_bound(max_n, 6, "max_n");
  std::vector<Polyomino> out;
  for (int height = 1; height <= max_n; ++height) {
    LConvexSearch search{max_m, height, {}, &out};
    std::vector<int> state(max_m, 0);
    search.extend(state);
  }
  return out;
}

}  // namespace lconvex
