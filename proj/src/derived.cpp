#include "lconvex/derived.hpp"

#include <algorithm>
#include <map>

#include "lconvex/error.hpp"
#include "lconvex/hibi.hpp"
#include "lconvex/projection.hpp"

namespace lconvex {

std::optional<Polyomino> remove_max_width_rectangle(const Polyomino& p) {
  if (!is_l_convex(p)) throw Error(ErrorKind::NotLConvex, "derived sequence requires an L-convex polyomino");
  if (p.is_rectangle()) return std::nullopt;
  const std::uint64_t full = p.width() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.width()) - 1;
  std::vector<std::uint64_t> kept;
  for (std::uint64_t row : p.rows())
    if (row != full) kept.push_back(row);
  try {
    Polyomino next = Polyomino::from_rows(std::move(kept));
    if (!is_l_convex(next)) inconsistency("removing the full-width rows left a polyomino that is not L-convex");
    return next;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InternalInconsistency) throw;
    inconsistency(std::string("removing the full-width rows failed: ") + e.what());
  }
}

std::vector<Polyomino> derived_sequence(const Polyomino& p) {
  std::vector<Polyomino> out{p};
  while (auto next = remove_max_width_rectangle(out.back())) out.push_back(std::move(*next));
  return out;
}

bool is_gorenstein(const Polyomino& p) {
  for (const Polyomino& q : derived_sequence(p))
    if (q.width() != q.height()) return false;
  return true;
}

ValueMultiplicities value_multiplicities(const std::vector<int>& projection) {
  std::map<int, int> counts;
  for (int v : projection) ++counts[v];
  ValueMultiplicities vm;
  vm.cumulative = true;
  int running = 0;
  for (auto [value, count] : counts) {
    vm.values.push_back(value);
    vm.multiplicities.push_back(count);
    running += count;
    if (value != running) vm.cumulative = false;
  }
  return vm;
}

GorensteinReport gorenstein_numeric(const Polyomino& p) {
  GorensteinReport report;
  report.boxes_square = is_gorenstein(p);
  const ProjectionPair pp = projections(p);
  report.rows = value_multiplicities(pp.horizontal);
  report.columns = value_multiplicities(pp.vertical);
  if (report.rows.cumulative != report.columns.cumulative || report.rows.cumulative != report.boxes_square) {
    inconsistency("Gorenstein criteria disagree: rows " + std::to_string(report.rows.cumulative) + ", columns " +
                  std::to_string(report.columns.cumulative) + ", boxes " + std::to_string(report.boxes_square));
  }
  report.verdict = report.boxes_square;
  return report;
}

std::string_view to_string(SpectrumClass c) {
  switch (c) {
    case SpectrumClass::Gorenstein: return "Gorenstein";
    case SpectrumClass::GorensteinOnPuncturedSpectrum: return "GorensteinOnPuncturedSpectrum";
    case SpectrumClass::Neither: return "Neither";
  }
  return "?";
}

SpectrumReport punctured_spectrum_report(const Polyomino& p) {
  SpectrumReport report;
  const bool gorenstein = is_gorenstein(p);
  const Polyomino star = ferrer_project(p);
  report.ferrer_is_rectangle = star.is_rectangle();
  if (gorenstein) report.value = SpectrumClass::Gorenstein;
  else if (report.ferrer_is_rectangle) report.value = SpectrumClass::GorensteinOnPuncturedSpectrum;
  else report.value = SpectrumClass::Neither;

  const Poset q = join_irreducible_poset(star);
  const auto components = component_purity(q);
  report.components = static_cast<int>(components.size());
  report.components_pure = std::all_of(components.begin(), components.end(), [](const auto& c) { return c.pure(); });
  report.poset_pure = is_pure(q);
  if (report.poset_pure != gorenstein) {
    inconsistency("box criterion says " + std::string(gorenstein ? "" : "not ") +
                  "Gorenstein but the poset is " + (report.poset_pure ? "pure" : "not pure"));
  }
  if (report.components_pure != (report.value != SpectrumClass::Neither)) {
    inconsistency("punctured spectrum: rectangle test and component purity disagree");
  }
  return report;
}

SpectrumClass punctured_spectrum_class(const Polyomino& p) { return punctured_spectrum_report(p).value; }

}  // namespace lconvex
