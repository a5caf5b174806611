#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lconvex/bigint.hpp"
#include "lconvex/polyomino.hpp"

namespace lconvex {

// Maximal rectangle sizes c_i x d_i ordered by width: c_1 < ... < c_t = m and
// d_1 = n > ... > d_t. Vectors are 0-based; c[i-1] is c_i.
struct RectangleSizes {
  int m = 0;
  int n = 0;
  std::vector<int> c;
  std::vector<int> d;
  int t() const noexcept { return static_cast<int>(c.size()); }
};

// Throws NotLConvex.
RectangleSizes rectangle_sizes(const Polyomino& p);

// Two points in the general sums admit two readings. `final_b_uses_n`: the
// last binomial of B counts values in {i+1, ..., n}. `shift_first_b_h`: the
// first binomial of B_h counts values in {m - c_h + 1, ..., i_1 - 1} rather
// than {1, ..., i_1 - 1}. The default is the reading the oracle confirms.
struct FormulaReading {
  bool final_b_uses_n = true;
  bool shift_first_b_h = true;
};

inline constexpr FormulaReading kPrintedReading{false, false};

BigInt type_A(const RectangleSizes& s);
BigInt type_B(const RectangleSizes& s, FormulaReading reading = {});
BigInt type_A_h(const RectangleSizes& s, int h);  // 1 <= h <= t-1
BigInt type_B_h(const RectangleSizes& s, int h, FormulaReading reading = {});  // 1 <= h <= t-1

struct CaseValue {
  std::string label;  // "m", "n", "h=<k>" or "rectangle"
  int r_value = 0;    // candidate value for r
  BigInt value = 0;
  std::optional<BigInt> a_part;  // A_h
  std::optional<BigInt> b_part;  // B_h
};

struct ClosedType {
  int r = 0;
  std::vector<CaseValue> cases;  // every case attaining r
  std::optional<BigInt> total;   // set only when exactly one case attains r
  bool tie() const noexcept { return cases.size() > 1; }
};

// Two maximal rectangles m x s (full width) and t x n (full height).
// Throws DegenerateSizes unless 1 <= s < n and 1 <= t < m.
ClosedType cm_type_two_rect(int m, int s, int t, int n);

// General closed form over the maximal rectangles of an L-convex P. A single
// rectangle m x n gives C(max(m,n), min(m,n)). Throws NotLConvex.
ClosedType cm_type_closed(const Polyomino& p, FormulaReading reading = {});
ClosedType cm_type_closed(const RectangleSizes& s, FormulaReading reading = {});

}  // namespace lconvex
