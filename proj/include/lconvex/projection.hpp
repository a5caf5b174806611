#pragma once

#include <span>
#include <vector>

#include "lconvex/polyomino.hpp"

namespace lconvex {

// Row and column cell counts. Rows are numbered top to bottom, columns left
// to right.
struct ProjectionPair {
  std::vector<int> horizontal;
  std::vector<int> vertical;
  bool operator==(const ProjectionPair&) const = default;
};

ProjectionPair projections(const Polyomino& p);

bool is_unimodal(std::span<const int> values);

// Left/top-justified diagram whose rows, read top to bottom, have weakly
// decreasing widths.
bool is_ferrer(const Polyomino& p);

// The Ferrer diagram P* whose projections are the descending sorts of those
// of P. Throws NotLConvex.
Polyomino ferrer_project(const Polyomino& p);

// The unique L-convex polyomino with the given projections. Exhaustive offset
// search; throws NoRealization when none exists and AmbiguousRealization if
// the search finds two.
Polyomino reconstruct_l_convex(const ProjectionPair& pp);

}  // namespace lconvex
