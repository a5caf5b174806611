#include "lconvex/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "lconvex/error.hpp"

namespace lconvex {

BipartiteGraph::BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                               std::vector<std::pair<int, int>> edges)
    : left_(std::move(left)), right_(std::move(right)), edges_(std::move(edges)) {
  for (auto [a, b] : edges_) {
    if (a < 0 || a >= left_size() || b < 0 || b >= right_size()) {
      throw Error(ErrorKind::ParseError, "edge endpoint out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool BipartiteGraph::has_edge(int left, int right) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{left, right});
}

std::vector<int> BipartiteGraph::left_degrees() const {
  std::vector<int> d(left_size(), 0);
  for (auto [a, b] : edges_) ++d[a];
  return d;
}

std::vector<int> BipartiteGraph::right_degrees() const {
  std::vector<int> d(right_size(), 0);
  for (auto [a, b] : edges_) ++d[b];
  return d;
}

std::vector<int> BipartiteGraph::left_neighbors(int left) const {
  std::vector<int> out;
  for (auto [a, b] : edges_)
    if (a == left) out.push_back(b);
  return out;
}

BipartiteGraph cell_graph(const Polyomino& p) {
  if (!is_convex(p)) throw Error(ErrorKind::NotConvex, "cell graph requires a convex polyomino");
  const int m = p.width(), n = p.height();
  std::vector<std::string> cols, rows;
  for (int j = 1; j <= m; ++j) cols.push_back("X" + std::to_string(j));
  for (int i = 1; i <= n; ++i) rows.push_back("Y" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < n; ++y)
      if (p.contains(x, y)) edges.emplace_back(x, n - 1 - y);
  return BipartiteGraph(std::move(cols), std::move(rows), std::move(edges));
}

namespace {

struct Span {
  int lo = 0;
  int hi = -1;  // lattice coordinates, inclusive
};

// Maximal edge interval lying on a grid line, given which unit edges along the
// line are present. Throws NotConvex if the present edges are not contiguous.
Span single_interval(const std::vector<bool>& present, const char* what, int line) {
  Span s;
  int first = -1, last = -1;
  for (int k = 0; k < static_cast<int>(present.size()); ++k) {
    if (!present[k]) continue;
    if (first < 0) first = k;
    else if (last != k - 1) {
      throw Error(ErrorKind::NotConvex, std::string(what) + " line " + std::to_string(line) +
                                            " carries more than one maximal edge interval");
    }
    last = k;
  }
  s.lo = first;
  s.hi = last + 1;
  return s;
}

}  // namespace

BipartiteGraph vertex_graph(const Polyomino& p) {
  if (!is_convex(p)) throw Error(ErrorKind::NotConvex, "vertex graph requires a convex polyomino");
  const int m = p.width(), n = p.height();
  std::vector<Span> vertical(m + 1), horizontal(n + 1);
  for (int x = 0; x <= m; ++x) {
    std::vector<bool> present(n);
    for (int y = 0; y < n; ++y) present[y] = p.contains(x - 1, y) || p.contains(x, y);
    vertical[x] = single_interval(present, "vertical", x);
  }
  for (int y = 0; y <= n; ++y) {
    std::vector<bool> present(m);
    for (int x = 0; x < m; ++x) present[x] = p.contains(x, y - 1) || p.contains(x, y);
    horizontal[y] = single_interval(present, "horizontal", y);
  }
  std::vector<std::string> left, right;
  for (int x = 0; x <= m; ++x) {
    left.push_back("x" + std::to_string(x) + "[" + std::to_string(vertical[x].lo) + ".." +
                   std::to_string(vertical[x].hi) + "]");
  }
  // y_j is the grid line at height n - j.
  for (int j = 0; j <= n; ++j) {
    const Span& s = horizontal[n - j];
    right.push_back("y" + std::to_string(j) + "[" + std::to_string(s.lo) + ".." + std::to_string(s.hi) + "]");
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x <= m; ++x) {
    for (int j = 0; j <= n; ++j) {
      const int y = n - j;
      const Span& v = vertical[x];
      const Span& h = horizontal[y];
      if (v.lo <= y && y <= v.hi && h.lo <= x && x <= h.hi) edges.emplace_back(x, j);
    }
  }
  return BipartiteGraph(std::move(left), std::move(right), std::move(edges));
}

bool is_ferrer_graph(const BipartiteGraph& g) {
  const int p = g.left_size(), q = g.right_size();
  if (p == 0 || q == 0) return false;
  if (!g.has_edge(0, q - 1) || !g.has_edge(p - 1, 0)) return false;
  for (auto [i, j] : g.edges()) {
    if (i > 0 && !g.has_edge(i - 1, j)) return false;
    if (j > 0 && !g.has_edge(i, j - 1)) return false;
  }
  return true;
}

namespace {

std::vector<int> order_by_degree(const std::vector<int>& degrees) {
  std::vector<int> order(degrees.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degrees[a] > degrees[b]; });
  return order;
}

}  // namespace

BipartiteGraph canonical_form(const BipartiteGraph& g) {
  const auto left_order = order_by_degree(g.left_degrees());
  const auto right_order = order_by_degree(g.right_degrees());
  std::vector<int> left_pos(left_order.size()), right_pos(right_order.size());
  std::vector<std::string> left, right;
  for (std::size_t k = 0; k < left_order.size(); ++k) {
    left_pos[left_order[k]] = static_cast<int>(k);
    left.push_back(g.left_labels()[left_order[k]]);
  }
  for (std::size_t k = 0; k < right_order.size(); ++k) {
    right_pos[right_order[k]] = static_cast<int>(k);
    right.push_back(g.right_labels()[right_order[k]]);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(left_pos[a], right_pos[b]);
  return BipartiteGraph(std::move(left), std::move(right), std::move(edges));
}

BigInt matching_count(const BipartiteGraph& g, int k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (g.right_size() > 64) throw Error(ErrorKind::TooLarge, "matching_count supports at most 64 right vertices");
  const int p = g.left_size();
  std::vector<std::uint64_t> adj(p, 0);
  for (auto [a, b] : g.edges()) adj[a] |= std::uint64_t{1} << b;

  // Memo key: (next left vertex, used right vertices, matchings still to pick).
  struct KeyHash {
    std::size_t operator()(const std::tuple<int, std::uint64_t, int>& t) const {
      auto [i, mask, r] = t;
      return std::hash<std::uint64_t>()(mask * 1000003ULL ^ (std::uint64_t(i) << 40) ^ std::uint64_t(r));
    }
  };
  std::unordered_map<std::tuple<int, std::uint64_t, int>, BigInt, KeyHash> memo;

  auto count = [&](auto&& self, int i, std::uint64_t used, int remaining) -> BigInt {
    if (remaining == 0) return 1;
    if (p - i < remaining) return 0;
    const auto key = std::tuple{i, used, remaining};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = self(self, i + 1, used, remaining);
    std::uint64_t free = adj[i] & ~used;
    while (free) {
      const std::uint64_t bit = free & (~free + 1);
      free ^= bit;
      total += self(self, i + 1, used | bit, remaining - 1);
    }
    memo.emplace(key, total);
    return total;
  };
  return count(count, 0, 0, k);
}

}  // namespace lconvex
