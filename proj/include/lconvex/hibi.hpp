#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lconvex/bigint.hpp"
#include "lconvex/polyomino.hpp"

namespace lconvex {

// Finite poset on at most 64 elements. Built from generating relations
// (a, b) meaning a < b; the order is their transitive closure and the Hasse
// diagram its transitive reduction.
class Poset {
 public:
  static constexpr int kMaxElements = 64;

  Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool less(int a, int b) const { return (above_[a] >> b) & 1U; }
  // Bitmask of elements strictly above / below.
  std::uint64_t above(int a) const { return above_[a]; }
  std::uint64_t below(int a) const { return below_[a]; }

  // Hasse diagram edges (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }

  // Number of edges in a longest chain.
  int rank() const noexcept { return rank_; }

  // A linear extension (every element after all elements below it).
  const std::vector<int>& linear_extension() const noexcept { return order_; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // "a < b" per line, Hasse edges in sorted order.
  std::string hasse_dump() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> above_;
  std::vector<std::uint64_t> below_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> order_;
  int rank_ = 0;
};

// Poset of join-irreducible elements of the vertex lattice of a Ferrer
// diagram: chains H_1 < ... < H_n (horizontal edge intervals, bottom to top)
// and V_1 < ... < V_m (vertical edge intervals, left to right), plus a cover
// H_i < V_j whenever H_i is the lowest interval meeting V_j and j is the
// smallest such index. Elements 0..n-1 are H_1..H_n, n..n+m-1 are V_1..V_m.
// Throws NotFerrer.
Poset join_irreducible_poset(const Polyomino& ferrer);

// All down-closed subsets as bitmasks. Throws TooLarge above `max_elements`.
std::vector<std::uint64_t> poset_ideals(const Poset& q, int max_elements = 22);

struct PosetComponent {
  std::vector<int> elements;
  int shortest_maximal_chain = 0;  // in elements
  int longest_maximal_chain = 0;
  bool pure() const noexcept { return shortest_maximal_chain == longest_maximal_chain; }
};

// Connected components of the Hasse diagram with their purity.
std::vector<PosetComponent> component_purity(const Poset& q);

// All maximal chains of Q have the same length.
bool is_pure(const Poset& q);

// Strictly order-reversing map on Q ∪ {-inf, +inf} with value 0 at +inf.
struct OrderReversingMap {
  int bottom = 0;           // value at -inf
  std::vector<int> values;  // values on Q
  auto operator<=>(const OrderReversingMap&) const = default;
};

struct CmTypeOracle {
  BigInt count = 0;
  int chain_length = 0;  // rank + 1
  int degree_bound = 0;  // largest value at -inf enumerated
  std::size_t candidates = 0;
  std::vector<OrderReversingMap> minimal;
  // Every minimal map has value r+1 at -inf and reads r, ..., 1 along some
  // maximal chain of Q of length r.
  bool minimal_maps_on_longest_chain = true;
};

// A minimal map has a tight cover leaving each level set {nu >= k}, so its
// value at -inf is at most |Q| + 1. That bound makes the count exact.
inline constexpr int kCompleteBound = -1;

// Enumerates every strictly order-reversing map with value at -inf at most
// r + 1 + extra_slack (r = rank + 1), or |Q| + 1 for kCompleteBound, and
// counts those minimal under "nu <= mu iff mu - nu is weakly
// order-reversing". Throws TooLarge above `max_elements`.
CmTypeOracle cm_type_oracle(const Poset& q, int extra_slack = kCompleteBound, int max_elements = 14);

// mu - nu is weakly order-reversing on Q ∪ {-inf, +inf} (nu lies below mu).
bool dominated_by(const Poset& q, const OrderReversingMap& nu, const OrderReversingMap& mu);

}  // namespace lconvex
