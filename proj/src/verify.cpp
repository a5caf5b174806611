#include "lconvex/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "lconvex/cm_type.hpp"
#include "lconvex/derived.hpp"
#include "lconvex/enumerate.hpp"
#include "lconvex/error.hpp"
#include "lconvex/graphs.hpp"
#include "lconvex/hibi.hpp"
#include "lconvex/ideal.hpp"
#include "lconvex/projection.hpp"
#include "lconvex/rooks.hpp"

namespace lconvex {

using nlohmann::json;

bool VerifyReport::all_pass() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return std::count_if(records.begin(), records.end(), [](const VerifyRecord& r) { return !r.pass; });
}

std::string VerifyReport::to_jsonl() const {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json line;
    line["instance"] = r.instance;
    line["check"] = r.check;
    line["pass"] = r.pass;
    line["detail"] = r.detail.is_null() ? json::object() : r.detail;
    out += line.dump() + '\n';
  }
  return out;
}

namespace {

std::string big(const BigInt& v) { return v.str(); }

// Lazily computed data shared by the checks of one instance.
struct Instance {
  explicit Instance(Polyomino poly) : p(std::move(poly)) {}

  Polyomino p;
  std::optional<Polyomino> star_;
  std::optional<Poset> poset_;
  std::map<int, CmTypeOracle> oracles_;

  const Polyomino& star() {
    if (!star_) star_ = ferrer_project(p);
    return *star_;
  }
  const Poset& poset() {
    if (!poset_) poset_ = join_irreducible_poset(star());
    return *poset_;
  }
  const CmTypeOracle& oracle(int slack = kCompleteBound) {
    auto it = oracles_.find(slack);
    if (it == oracles_.end()) it = oracles_.emplace(slack, cm_type_oracle(poset(), slack)).first;
    return it->second;
  }
};

struct Outcome {
  bool pass = false;
  json detail = json::object();
};

using CheckFn = std::function<std::optional<Outcome>(Instance&)>;

struct Check {
  CheckInfo info;
  CheckFn run;
};

std::optional<Outcome> reg_eq_rook(Instance& in) {
  const Regularity reg = regularity_report(in.p);
  const int rooks = rook_number(in.p);
  return Outcome{reg.value == rooks,
                 {{"regularity", reg.value}, {"column_form", reg.column_form}, {"rook_number", rooks}}};
}

std::optional<Outcome> rook_product(Instance& in) {
  const std::vector<int> h = projections(in.p).horizontal;
  Outcome out{true, {{"k_checked", h.size() + 1}}};
  for (int k = 0; k <= static_cast<int>(h.size()) + 1; ++k) {
    const BigInt formula = ferrer_rook_count(h, k);
    const BigInt brute = rook_count(in.p, k);
    if (formula != brute) {
      out.pass = false;
      out.detail["witness"] = {{"k", k}, {"formula", big(formula)}, {"brute_force", big(brute)}};
      break;
    }
  }
  return out;
}

std::optional<Outcome> ferrer_iso_cell(Instance& in) {
  const bool same = canonical_form(cell_graph(in.p)) == canonical_form(cell_graph(in.star()));
  return Outcome{same, {}};
}

std::optional<Outcome> ferrer_iso_vertex(Instance& in) {
  const bool same = canonical_form(vertex_graph(in.p)) == canonical_form(vertex_graph(in.star()));
  return Outcome{same, {}};
}

std::optional<Outcome> rook_eq_matching(Instance& in) {
  const BipartiteGraph f = cell_graph(in.p);
  Outcome out{true, {}};
  for (int k = 0; k <= std::min(in.p.width(), in.p.height()) + 1; ++k) {
    const BigInt r = rook_count(in.p, k), pm = matching_count(f, k), rs = rook_count(in.star(), k);
    if (r != pm || r != rs) {
      out.pass = false;
      out.detail["witness"] = {{"k", k}, {"rooks", big(r)}, {"matchings", big(pm)}, {"ferrer_rooks", big(rs)}};
      break;
    }
  }
  return out;
}

std::optional<Outcome> derived_commute(Instance& in) {
  const auto seq = derived_sequence(in.p);
  const auto star_seq = derived_sequence(in.star());
  Outcome out{seq.size() == star_seq.size(), {{"length", seq.size()}, {"ferrer_length", star_seq.size()}}};
  for (std::size_t k = 0; out.pass && k < seq.size(); ++k) {
    if (!(ferrer_project(seq[k]) == star_seq[k])) {
      out.pass = false;
      out.detail["witness"] = {{"k", k}, {"projected", key(ferrer_project(seq[k]))}, {"derived", key(star_seq[k])}};
    }
  }
  return out;
}

std::optional<Outcome> ideal_vanish(Instance& in) {
  const auto gens = inner_minors(in.p);
  const auto ring = edge_ring_presentation(in.p);
  Outcome out{true, {{"generators", gens.size()}}};
  for (const auto& g : gens) {
    if (!vanishes(ring, g)) {
      out.pass = false;
      out.detail["witness"] = to_string(g);
      break;
    }
  }
  if (in.p.is_rectangle()) {
    const BigInt expected = binomial(in.p.width() + 1, 2) * binomial(in.p.height() + 1, 2);
    if (expected != gens.size()) out.pass = false;
    out.detail["expected"] = big(expected);
  }
  return out;
}

std::optional<Outcome> lconvex_roundtrip(Instance& in) {
  const Polyomino back = reconstruct_l_convex(projections(in.p));
  return Outcome{back == in.p, {}};
}

std::optional<Outcome> unimodal(Instance& in) {
  const ProjectionPair pp = projections(in.p);
  const bool ok = is_unimodal(pp.horizontal) && is_unimodal(pp.vertical) &&
                  *std::max_element(pp.horizontal.begin(), pp.horizontal.end()) == in.p.width() &&
                  *std::max_element(pp.vertical.begin(), pp.vertical.end()) == in.p.height();
  return Outcome{ok, {{"H", pp.horizontal}, {"V", pp.vertical}}};
}

std::optional<Outcome> max_rect_unique(Instance& in) {
  const auto rects = maximal_rectangles_any(in.p);
  std::set<int> widths, heights;
  int full_width = 0, full_height = 0;
  json sizes = json::array();
  for (const auto& r : rects) {
    widths.insert(r.width);
    heights.insert(r.height);
    full_width += r.width == in.p.width();
    full_height += r.height == in.p.height();
    sizes.push_back(std::to_string(r.width) + "x" + std::to_string(r.height));
  }
  const bool ok = widths.size() == rects.size() && heights.size() == rects.size() && full_width == 1 &&
                  full_height == 1;
  return Outcome{ok, {{"sizes", sizes}}};
}

// Each projection entry is one less than the degree of the interval vertex
// on the near side of the first peak.
bool degrees_match(const std::vector<int>& projection, const std::vector<int>& degrees) {
  const int peak_value = *std::max_element(projection.begin(), projection.end());
  const int peak = static_cast<int>(std::find(projection.begin(), projection.end(), peak_value) - projection.begin());
  for (int j = 0; j < static_cast<int>(projection.size()); ++j) {
    const int vertex = j < peak ? j : j + 1;
    if (projection[j] != degrees[vertex] - 1) return false;
  }
  return true;
}

std::optional<Outcome> observation_degrees(Instance& in) {
  const BipartiteGraph g = vertex_graph(in.p);
  const ProjectionPair pp = projections(in.p);
  const bool ok = degrees_match(pp.vertical, g.left_degrees()) && degrees_match(pp.horizontal, g.right_degrees());
  return Outcome{ok, {{"x_degrees", g.left_degrees()}, {"y_degrees", g.right_degrees()}}};
}

std::optional<Outcome> gorenstein_agree(Instance& in) {
  const GorensteinReport report = gorenstein_numeric(in.p);
  const bool oracle_one = in.oracle().count == 1;
  const bool pure = is_pure(in.poset());
  return Outcome{report.verdict == oracle_one && report.verdict == pure,
                 {{"boxes_square", report.boxes_square},
                  {"rows_cumulative", report.rows.cumulative},
                  {"columns_cumulative", report.columns.cumulative},
                  {"oracle_type", big(in.oracle().count)},
                  {"poset_pure", pure}}};
}

std::optional<Outcome> punctured_agree(Instance& in) {
  const SpectrumReport report = punctured_spectrum_report(in.p);
  return Outcome{true,
                 {{"class", std::string(to_string(report.value))},
                  {"rectangle", report.ferrer_is_rectangle},
                  {"components", report.components},
                  {"components_pure", report.components_pure}}};
}

std::optional<Outcome> type_closed_eq_oracle(Instance& in) {
  const ClosedType closed = cm_type_closed(in.star());
  if (!closed.total) return std::nullopt;  // r attained by several cases
  const BigInt oracle = in.oracle().count;
  return Outcome{*closed.total == oracle,
                 {{"case", closed.cases.front().label}, {"closed", big(*closed.total)}, {"oracle", big(oracle)}}};
}

std::optional<Outcome> oracle_bound(Instance& in) {
  const auto& base = in.oracle(0);
  const auto& wide = in.oracle(1);
  return Outcome{base.count == wide.count,
                 {{"bound", base.degree_bound},
                  {"count", big(base.count)},
                  {"wide_bound", wide.degree_bound},
                  {"wide_count", big(wide.count)}}};
}

std::optional<Outcome> oracle_chain(Instance& in) {
  const auto& complete = in.oracle();
  return Outcome{complete.minimal_maps_on_longest_chain, {{"minimal_maps", complete.minimal.size()}}};
}

const std::vector<Check>& check_table() {
  static const std::vector<Check> table = {
      {{"reg_eq_rook", "l-convex", "regularity formula equals the rook number"}, reg_eq_rook},
      {{"ferrer_iso_cell", "l-convex", "cell graphs of P and P* agree up to degree relabelling"}, ferrer_iso_cell},
      {{"ferrer_iso_vertex", "l-convex", "vertex graphs of P and P* agree up to degree relabelling"},
       ferrer_iso_vertex},
      {{"rook_eq_matching", "l-convex", "r(P,k) = p(F_P,k) = r(P*,k) for all k"}, rook_eq_matching},
      {{"derived_commute", "l-convex", "derived sequence commutes with the Ferrer projection"}, derived_commute},
      {{"ideal_vanish", "l-convex", "inner 2-minors vanish under the edge-ring parametrization"}, ideal_vanish},
      {{"lconvex_roundtrip", "l-convex", "projections reconstruct the polyomino"}, lconvex_roundtrip},
      {{"unimodal", "l-convex", "projections are unimodal with maxima m and n"}, unimodal},
      {{"max_rect_unique", "l-convex", "maximal rectangles have distinct widths and heights"}, max_rect_unique},
      {{"observation_degrees", "l-convex", "projections are vertex-graph degrees minus one"}, observation_degrees},
      {{"rook_product", "ferrer-box", "product formula equals brute-force rook counts"}, rook_product},
      {{"gorenstein_agree", "ferrer-semiperimeter", "box, row, column, purity and oracle criteria agree"},
       gorenstein_agree},
      {{"punctured_agree", "ferrer-semiperimeter", "rectangle test agrees with component purity"}, punctured_agree},
      {{"type_closed_eq_oracle", "ferrer-semiperimeter", "closed CM type equals the oracle when r is unique"},
       type_closed_eq_oracle},
      {{"oracle_bound", "ferrer-semiperimeter", "raising the degree bound by one keeps the oracle count"},
       oracle_bound},
      {{"oracle_chain", "ferrer-semiperimeter", "minimal maps read r..1 along a longest chain"}, oracle_chain},
  };
  return table;
}

}  // namespace

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& c : check_table()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

VerifyReport verify_all(const VerifyOptions& options) {
  std::map<std::string, std::vector<const Check*>> by_family;
  for (const auto& id : options.checks) {
    const auto& table = check_table();
    auto it = std::find_if(table.begin(), table.end(), [&](const Check& c) { return c.info.id == id; });
    if (it == table.end()) throw Error(ErrorKind::ParseError, "unknown check '" + id + "'");
    auto& list = by_family[it->info.family];
    if (std::find(list.begin(), list.end(), &*it) == list.end()) list.push_back(&*it);
  }

  struct Job {
    Polyomino p;
    const std::vector<const Check*>* checks;
  };
  std::vector<Job> jobs;
  for (const auto& [family, checks] : by_family) {
    std::vector<Polyomino> instances;
    if (family == "l-convex") instances = enumerate_l_convex(options.max_m, options.max_n);
    else if (family == "ferrer-box") instances = enumerate_ferrer(options.max_m, options.max_n);
    else instances = enumerate_ferrer_semiperimeter(options.max_q);
    for (auto& p : instances) jobs.push_back({std::move(p), &checks});
  }

  std::vector<std::vector<VerifyRecord>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      Instance in(jobs[k].p);
      const std::string id = key(in.p);
      for (const Check* check : *jobs[k].checks) {
        VerifyRecord rec{id, check->info.id, false, json::object()};
        try {
          auto outcome = check->run(in);
          if (!outcome) continue;
          rec.pass = outcome->pass;
          rec.detail = std::move(outcome->detail);
        } catch (const std::exception& e) {
          rec.pass = false;
          rec.detail = {{"error", e.what()}};
        }
        results[k].push_back(std::move(rec));
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyReport report;
  for (auto& r : results)
    for (auto& rec : r) report.records.push_back(std::move(rec));
  std::sort(report.records.begin(), report.records.end(), [](const VerifyRecord& a, const VerifyRecord& b) {
    return std::tie(a.instance, a.check) < std::tie(b.instance, b.check);
  });
  return report;
}

}  // namespace lconvex
