#pragma once

#include <span>
#include <vector>

#include "lconvex/bigint.hpp"
#include "lconvex/polyomino.hpp"

namespace lconvex {

// Placements of k pairwise non-attacking rooks on cells of P, by exhaustive
// backtracking.
BigInt rook_count(const Polyomino& p, int k);

// r(P, k) for k = 0 .. r(P).
std::vector<BigInt> rook_counts(const Polyomino& p);

// Largest k admitting a non-attacking placement.
int rook_number(const Polyomino& p);

// Product formula for a Ferrer diagram with row widths `rows` (weakly
// decreasing): prod_{i=1..r} (h_{r-i+1} - (i-1)), clamped to 0.
// Throws RNotDescending.
BigInt ferrer_rook_count(std::span<const int> rows, int r);

struct Regularity {
  int value = 0;
  int row_form = 0;     // min{n, h*_j + j - 1}
  int column_form = 0;  // min{m, v*_j + j - 1}
};

// Regularity of K[P] for L-convex P from the Ferrer projection's row widths.
// Throws NotLConvex; throws InternalInconsistency if the row and column forms
// disagree.
Regularity regularity_report(const Polyomino& p);
int regularity(const Polyomino& p);

}  // namespace lconvex
