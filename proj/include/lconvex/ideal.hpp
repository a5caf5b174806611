#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lconvex/polyomino.hpp"

namespace lconvex {

// A lattice point (x, y), i.e. a vertex of the grid.
struct Vertex {
  int x = 0;
  int y = 0;
  auto operator<=>(const Vertex&) const = default;
};

// x_a x_b - x_c x_d for the interval [a, b]: a lower-left, b upper-right,
// c upper-left, d lower-right.
struct BinomialGenerator {
  Vertex a, b, c, d;
  auto operator<=>(const BinomialGenerator&) const = default;
};

std::string variable_name(Vertex v);  // x_<col>_<row>
std::string to_string(const BinomialGenerator& g);

// Vertices of the cells of P, sorted.
std::vector<Vertex> polyomino_vertices(const Polyomino& p);

// One generator per interval [a, b] with a < b coordinatewise whose cells all
// lie in P, ordered lexicographically by (a, b).
std::vector<BinomialGenerator> inner_minors(const Polyomino& p);

// Toric parametrization by the vertex graph: the vertex (i, j) maps to
// u_i * w_j where u_i names the maximal vertical edge interval on x = i and
// w_j the maximal horizontal edge interval on y = j.
struct EdgeRingPresentation {
  std::vector<std::string> variables;  // u_0..u_m, w_0..w_n
  struct Image {
    Vertex vertex;
    int column = 0;  // index into u
    int row = 0;     // index into w
  };
  std::vector<Image> images;
  int m = 0;
  int n = 0;
};

// Throws NotConvex. Throws InternalInconsistency if a vertex of P does not
// lie on both of its intervals.
EdgeRingPresentation edge_ring_presentation(const Polyomino& p);

// Substitutes the parametrization into g; true iff both monomials coincide.
bool vanishes(const EdgeRingPresentation& ring, const BinomialGenerator& g);

// Template for computer-algebra scripts. {{variables}} in the header is
// replaced by the comma-separated variable list.
struct CasTemplate {
  std::string name;
  std::string header;
  std::string item_prefix;
  std::string separator;
  std::string empty_body;
  std::string footer;
};

// Loads "<dir>/cas/<name>.json" from the shipped data directory, or `name`
// itself if it names an existing file. Throws UnknownFormat.
CasTemplate load_cas_template(const std::string& name_or_path);
CasTemplate parse_cas_template(std::string_view json_text);

// format: "plain", "json" or "cas-script". Throws UnknownFormat.
std::string export_generators(const std::vector<BinomialGenerator>& gens, const std::vector<Vertex>& variables,
                              std::string_view format, const CasTemplate* cas = nullptr);

std::string data_directory();

}  // namespace lconvex
