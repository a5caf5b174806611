#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lconvex/bigint.hpp"
#include "lconvex/polyomino.hpp"

namespace lconvex {

// Bipartite graph with labelled parts. Edges are (left index, right index),
// kept sorted and free of duplicates. Equality compares part sizes and edges
// only; labels are informational.
class BipartiteGraph {
 public:
  BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                 std::vector<std::pair<int, int>> edges);

  int left_size() const noexcept { return static_cast<int>(left_.size()); }
  int right_size() const noexcept { return static_cast<int>(right_.size()); }
  const std::vector<std::string>& left_labels() const noexcept { return left_; }
  const std::vector<std::string>& right_labels() const noexcept { return right_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  bool has_edge(int left, int right) const;
  std::vector<int> left_degrees() const;
  std::vector<int> right_degrees() const;
  std::vector<int> left_neighbors(int left) const;

  bool operator==(const BipartiteGraph& other) const {
    return left_size() == other.left_size() && right_size() == other.right_size() && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<std::pair<int, int>> edges_;
};

// F_P: X_1..X_m (columns, left to right) versus Y_1..Y_n (rows, top to
// bottom); one edge per cell. Throws NotConvex.
BipartiteGraph cell_graph(const Polyomino& p);

// G_P: x_0..x_m (maximal vertical edge intervals, left to right) versus
// y_0..y_n (maximal horizontal edge intervals, top to bottom); an edge joins
// two intervals that meet. Labels carry the interval endpoints. Throws
// NotConvex.
BipartiteGraph vertex_graph(const Polyomino& p);

// {u_1, v_q} and {u_p, v_1} are edges, and every edge {u_i, v_j} forces
// {u_r, v_s} for all r <= i, s <= j.
bool is_ferrer_graph(const BipartiteGraph& g);

// Both parts stably reordered by weakly decreasing degree.
BipartiteGraph canonical_form(const BipartiteGraph& g);

// Number of k-edge matchings. Throws TooLarge if the right part exceeds 64
// vertices.
BigInt matching_count(const BipartiteGraph& g, int k);

}  // namespace lconvex
