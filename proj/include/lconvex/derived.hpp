#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lconvex/polyomino.hpp"

namespace lconvex {

// Deletes the rows of full width and reglues the part above onto the part
// below. Returns nullopt when P is a rectangle. Throws NotLConvex.
std::optional<Polyomino> remove_max_width_rectangle(const Polyomino& p);

// P_0 = P, P_1, ..., P_t with P_t a rectangle. Throws NotLConvex.
std::vector<Polyomino> derived_sequence(const Polyomino& p);

// Every member of the derived sequence has a square bounding box.
bool is_gorenstein(const Polyomino& p);

struct ValueMultiplicities {
  std::vector<int> values;          // distinct, ascending
  std::vector<int> multiplicities;  // matching counts
  bool cumulative = false;          // values[l] == multiplicities[0] + ... + multiplicities[l]
};

struct GorensteinReport {
  ValueMultiplicities rows;     // from H
  ValueMultiplicities columns;  // from V
  bool boxes_square = false;
  bool verdict = false;
};

ValueMultiplicities value_multiplicities(const std::vector<int>& projection);

// Both numeric criteria on the projections plus the box criterion. Throws
// NotLConvex; throws InternalInconsistency if any two disagree.
GorensteinReport gorenstein_numeric(const Polyomino& p);

enum class SpectrumClass { Gorenstein, GorensteinOnPuncturedSpectrum, Neither };

std::string_view to_string(SpectrumClass c);

struct SpectrumReport {
  SpectrumClass value = SpectrumClass::Neither;
  bool ferrer_is_rectangle = false;
  int components = 0;
  bool components_pure = false;
  bool poset_pure = false;
};

// Gorenstein first; otherwise Gorenstein on the punctured spectrum iff P is a
// rectangle. Cross-checked against purity of the components of the
// join-irreducible poset of P*. Throws NotLConvex; throws
// InternalInconsistency on disagreement.
SpectrumReport punctured_spectrum_report(const Polyomino& p);
SpectrumClass punctured_spectrum_class(const Polyomino& p);

}  // namespace lconvex
