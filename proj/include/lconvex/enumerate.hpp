#pragma once

#include <vector>

#include "lconvex/polyomino.hpp"

namespace lconvex {

// Ferrer diagrams whose bounding box fits in max_m x max_n, i.e. nonempty
// partitions with at most max_n parts, each at most max_m. Ordered by the
// row widths read top to bottom, lexicographically. Throws BoundTooLarge
// beyond 8.
std::vector<Polyomino> enumerate_ferrer(int max_m, int max_n);

// Ferrer diagrams with width + height <= max_semiperimeter. Throws
// BoundTooLarge beyond 16.
std::vector<Polyomino> enumerate_ferrer_semiperimeter(int max_semiperimeter);

// L-convex polyominoes whose bounding box fits in max_m x max_n, each once up
// to translation. Ordered by height, then by row intervals bottom to top.
// Throws BoundTooLarge beyond 6.
std::vector<Polyomino> enumerate_l_convex(int max_m, int max_n);

}  // namespace lconvex
