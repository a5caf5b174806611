#include "lconvex/hibi.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "lconvex/error.hpp"
#include "lconvex/projection.hpp"

namespace lconvex {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

Poset::Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations)
    : labels_(std::move(labels)) {
  const int n = size();
  if (n > kMaxElements) throw Error(ErrorKind::TooLarge, "posets are limited to 64 elements");
  above_.assign(n, 0);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error(ErrorKind::ParseError, "relation out of range");
    above_[a] |= bit(b);
  }
  // Transitive closure: repeat until stable (n is tiny).
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      std::uint64_t acc = above_[a];
      for (std::uint64_t rest = above_[a]; rest; rest &= rest - 1) acc |= above_[std::countr_zero(rest)];
      if (acc != above_[a]) {
        above_[a] = acc;
        changed = true;
      }
    }
  }
  below_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    if (above_[a] & bit(a)) throw Error(ErrorKind::ParseError, "relations contain a cycle through " + labels_[a]);
    for (std::uint64_t rest = above_[a]; rest; rest &= rest - 1) below_[std::countr_zero(rest)] |= bit(a);
  }
  for (int a = 0; a < n; ++a) {
    for (std::uint64_t rest = above_[a]; rest; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      if ((above_[a] & below_[b]) == 0) covers_.emplace_back(a, b);
    }
  }
  std::sort(covers_.begin(), covers_.end());

  // Linear extension by number of elements below, ties by index.
  order_.resize(n);
  for (int a = 0; a < n; ++a) order_[a] = a;
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int a, int b) { return std::popcount(below_[a]) < std::popcount(below_[b]); });

  std::vector<int> height(n, 0);
  for (int a : order_)
    for (std::uint64_t rest = below_[a]; rest; rest &= rest - 1)
      height[a] = std::max(height[a], height[std::countr_zero(rest)] + 1);
  for (int h : height) rank_ = std::max(rank_, h);
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a)
    if (below_[a] == 0) out.push_back(a);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a)
    if (above_[a] == 0) out.push_back(a);
  return out;
}

std::string Poset::hasse_dump() const {
  std::ostringstream os;
  for (auto [a, b] : covers_) os << labels_[a] << " < " << labels_[b] << '\n';
  return os.str();
}

namespace {

struct Interval {
  int lo = 0;
  int hi = -1;
  bool meets(int t) const { return lo <= t && t <= hi; }
};

// Span of present unit edges along one grid line; a Ferrer diagram has one.
Interval edge_interval(const std::vector<bool>& present) {
  Interval s;
  int first = -1, last = -1;
  for (int k = 0; k < static_cast<int>(present.size()); ++k) {
    if (!present[k]) continue;
    if (first < 0) first = k;
    last = k;
  }
  s.lo = first;
  s.hi = last + 1;
  return s;
}

}  // namespace

Poset join_irreducible_poset(const Polyomino& ferrer) {
  if (!is_ferrer(ferrer)) throw Error(ErrorKind::NotFerrer, "join-irreducible poset requires a Ferrer diagram");
  const int m = ferrer.width(), n = ferrer.height();
  std::vector<Interval> horizontal(n + 1), vertical(m + 1);
  for (int y = 0; y <= n; ++y) {
    std::vector<bool> present(m);
    for (int x = 0; x < m; ++x) present[x] = ferrer.contains(x, y - 1) || ferrer.contains(x, y);
    horizontal[y] = edge_interval(present);
  }
  for (int x = 0; x <= m; ++x) {
    std::vector<bool> present(n);
    for (int y = 0; y < n; ++y) present[y] = ferrer.contains(x - 1, y) || ferrer.contains(x, y);
    vertical[x] = edge_interval(present);
  }
  auto intersects = [&](int i, int j) { return horizontal[i].meets(j) && vertical[j].meets(i); };

  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("H" + std::to_string(i));
  for (int j = 1; j <= m; ++j) labels.push_back("V" + std::to_string(j));
  auto h_index = [](int i) { return i - 1; };
  auto v_index = [n](int j) { return n + j - 1; };

  std::vector<std::pair<int, int>> relations;
  for (int i = 1; i < n; ++i) relations.emplace_back(h_index(i), h_index(i + 1));
  for (int j = 1; j < m; ++j) relations.emplace_back(v_index(j), v_index(j + 1));

  // lowest[j]: the smallest i with H_i meeting V_j.
  std::vector<int> lowest(m + 1, -1);
  for (int j = 0; j <= m; ++j)
    for (int i = 0; i <= n && lowest[j] < 0; ++i)
      if (intersects(i, j)) lowest[j] = i;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (lowest[j] == i) {
        relations.emplace_back(h_index(i), v_index(j));
        break;
      }
    }
  }
  return Poset(std::move(labels), relations);
}

std::vector<std::uint64_t> poset_ideals(const Poset& q, int max_elements) {
  if (q.size() > max_elements) {
    throw Error(ErrorKind::TooLarge, "poset has " + std::to_string(q.size()) + " elements, ideal bound is " +
                                         std::to_string(max_elements));
  }
  const auto& order = q.linear_extension();
  std::vector<std::uint64_t> out;
  auto walk = [&](auto&& self, std::size_t k, std::uint64_t ideal) -> void {
    if (k == order.size()) {
      out.push_back(ideal);
      return;
    }
    const int p = order[k];
    self(self, k + 1, ideal);
    if ((q.below(p) & ~ideal) == 0) self(self, k + 1, ideal | bit(p));
  };
  walk(walk, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Lengths (in elements) of the shortest and longest saturated chains from
// each element up to a maximal element, following Hasse edges.
void chain_lengths_up(const Poset& q, std::vector<int>& shortest, std::vector<int>& longest) {
  const int n = q.size();
  std::vector<std::vector<int>> up(n);
  for (auto [a, b] : q.covers()) up[a].push_back(b);
  shortest.assign(n, 0);
  longest.assign(n, 0);
  const auto& order = q.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int a = *it;
    if (up[a].empty()) {
      shortest[a] = longest[a] = 1;
      continue;
    }
    shortest[a] = 1 << 20;
    for (int b : up[a]) {
      shortest[a] = std::min(shortest[a], shortest[b] + 1);
      longest[a] = std::max(longest[a], longest[b] + 1);
    }
  }
}

}  // namespace

std::vector<PosetComponent> component_purity(const Poset& q) {
  const int n = q.size();
  std::vector<int> parent(n);
  for (int a = 0; a < n; ++a) parent[a] = a;
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (auto [a, b] : q.covers()) parent[find(a)] = find(b);

  std::vector<int> shortest, longest;
  chain_lengths_up(q, shortest, longest);

  std::vector<PosetComponent> out;
  std::vector<int> slot(n, -1);
  for (int a = 0; a < n; ++a) {
    const int root = find(a);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
      out.back().shortest_maximal_chain = 1 << 20;
    }
    PosetComponent& c = out[slot[root]];
    c.elements.push_back(a);
    if (q.below(a) == 0) {
      c.shortest_maximal_chain = std::min(c.shortest_maximal_chain, shortest[a]);
      c.longest_maximal_chain = std::max(c.longest_maximal_chain, longest[a]);
    }
  }
  return out;
}

bool is_pure(const Poset& q) {
  std::vector<int> shortest, longest;
  chain_lengths_up(q, shortest, longest);
  int lo = 1 << 20, hi = 0;
  for (int a : q.minimal_elements()) {
    lo = std::min(lo, shortest[a]);
    hi = std::max(hi, longest[a]);
  }
  return lo == hi;
}

bool dominated_by(const Poset& q, const OrderReversingMap& nu, const OrderReversingMap& mu) {
  // f = mu - nu must be >= 0 at every element below the top and weakly
  // order-reversing; covers of Q-hat suffice.
  auto f = [&](int p) { return mu.values[p] - nu.values[p]; };
  for (int p : q.maximal_elements())
    if (f(p) < 0) return false;
  for (auto [a, b] : q.covers())
    if (f(a) < f(b)) return false;
  const int f_bottom = mu.bottom - nu.bottom;
  for (int p : q.minimal_elements())
    if (f_bottom < f(p)) return false;
  return true;
}

namespace {

struct OracleSearch {
  const Poset& q;
  int n;
  std::vector<std::vector<int>> upper;  // upper covers within Q
  std::vector<int> below_chain;         // longest chain strictly below, in elements
  std::vector<int> top_down;            // reverse linear extension
  std::vector<int> minimal;

  explicit OracleSearch(const Poset& poset) : q(poset), n(poset.size()), upper(n), below_chain(n, 0) {
    for (auto [a, b] : q.covers()) upper[a].push_back(b);
    for (int a : q.linear_extension())
      for (auto [x, y] : q.covers())
        if (y == a) below_chain[a] = std::max(below_chain[a], below_chain[x] + 1);
    top_down.assign(q.linear_extension().rbegin(), q.linear_extension().rend());
    minimal = q.minimal_elements();
  }

  // Does some strictly order-reversing mu != nu lie below nu, i.e. nu - mu
  // weakly order-reversing? Assign mu top-down; each element's admissible
  // values form an interval fixed by its already assigned upper covers.
  bool has_smaller(const OrderReversingMap& nu) const {
    std::vector<int> mu(n, 0);
    auto step = [&](auto&& self, std::size_t k) -> bool {
      if (k == top_down.size()) {
        int lo = 1, f_needed = 0;
        for (int p : minimal) {
          lo = std::max(lo, mu[p] + 1);
          f_needed = std::max(f_needed, nu.values[p] - mu[p]);
        }
        const int hi = std::min(nu.bottom - f_needed, nu.bottom - 1);
        return lo <= hi;
      }
      const int p = top_down[k];
      int lo = 1, f_min = 0;
      for (int u : upper[p]) {
        lo = std::max(lo, mu[u] + 1);
        f_min = std::max(f_min, nu.values[u] - mu[u]);
      }
      const int hi = nu.values[p] - f_min;
      for (int v = lo; v <= hi; ++v) {
        mu[p] = v;
        if (self(self, k + 1)) return true;
      }
      return false;
    };
    return step(step, 0);
  }

  // Values r, r-1, ..., 1 along some saturated chain from a minimal to a
  // maximal element of Q with r elements.
  bool reads_down_longest_chain(const OrderReversingMap& nu, int r) const {
    if (nu.bottom != r + 1) return false;
    auto from = [&](auto&& self, int p, int expected) -> bool {
      if (nu.values[p] != expected) return false;
      if (expected == 1) return upper[p].empty();
      for (int u : upper[p])
        if (self(self, u, expected - 1)) return true;
      return false;
    };
    for (int p : minimal)
      if (from(from, p, r)) return true;
    return false;
  }
};

}  // namespace

CmTypeOracle cm_type_oracle(const Poset& q, int extra_slack, int max_elements) {
  if (q.size() > max_elements) {
    throw Error(ErrorKind::TooLarge, "poset has " + std::to_string(q.size()) + " elements, oracle bound is " +
                                         std::to_string(max_elements));
  }
  OracleSearch search(q);
  CmTypeOracle result;
  const int n = q.size();
  result.chain_length = q.rank() + 1;
  result.degree_bound = extra_slack == kCompleteBound ? n + 1 : result.chain_length + 1 + std::max(extra_slack, 0);
  const int bound = result.degree_bound;

  std::vector<int> values(n, 0);
  auto visit = [&](auto&& self, std::size_t k) -> void {
    if (k == search.top_down.size()) {
      int floor = 1;
      for (int p : search.minimal) floor = std::max(floor, values[p] + 1);
      for (int b = floor; b <= bound; ++b) {
        OrderReversingMap nu{b, values};
        ++result.candidates;
        if (search.has_smaller(nu)) continue;
        if (!search.reads_down_longest_chain(nu, result.chain_length)) result.minimal_maps_on_longest_chain = false;
        result.minimal.push_back(std::move(nu));
      }
      return;
    }
    const int p = search.top_down[k];
    int lo = 1;
    for (int u : search.upper[p]) lo = std::max(lo, values[u] + 1);
    // Leave room for the chain below p and for the value at -inf.
    const int hi = bound - 1 - search.below_chain[p];
    for (int v = lo; v <= hi; ++v) {
      values[p] = v;
      self(self, k + 1);
    }
  };
  visit(visit, 0);
  std::sort(result.minimal.begin(), result.minimal.end());
  result.count = result.minimal.size();
  return result;
}

}  // namespace lconvex
