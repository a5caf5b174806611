#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lconvex/cm_type.hpp"
#include "lconvex/derived.hpp"
#include "lconvex/enumerate.hpp"
#include "lconvex/error.hpp"
#include "lconvex/graphs.hpp"
#include "lconvex/hibi.hpp"
#include "lconvex/ideal.hpp"
#include "lconvex/io.hpp"
#include "lconvex/projection.hpp"
#include "lconvex/rooks.hpp"
#include "lconvex/verify.hpp"

using namespace lconvex;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kPrecondition = 2, kVerification = 3, kInconsistency = 4 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json closed_to_json(const ClosedType& closed) {
  json cases = json::array();
  for (const auto& c : closed.cases) {
    json item = {{"case", c.label}, {"r", c.r_value}, {"value", c.value.str()}};
    if (c.a_part) item["A_h"] = c.a_part->str();
    if (c.b_part) item["B_h"] = c.b_part->str();
    cases.push_back(item);
  }
  json out = {{"r", closed.r}, {"cases", cases}, {"tie", closed.tie()}};
  out["total"] = closed.total ? json(closed.total->str()) : json(nullptr);
  return out;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownFormat:
    case ErrorKind::UnknownStyle: return kUsage;
    case ErrorKind::InternalInconsistency: return kInconsistency;
    default: return kPrecondition;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of L-convex polyominoes"};
  app.require_subcommand(1);

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "JSON file with cells or projections ('-' for stdin)");
  };

  auto* validate = app.add_subcommand("validate", "convexity, L-convexity and Ferrer tests");
  add_input(validate);

  auto* project = app.add_subcommand("project", "projections and the Ferrer projection");
  add_input(project);

  int k = -1;
  auto* rooks = app.add_subcommand("rooks", "non-attacking rook counts");
  add_input(rooks);
  rooks->add_option("--k", k, "count placements of exactly k rooks");

  bool reg_check = false;
  auto* reg = app.add_subcommand("reg", "regularity of K[P]");
  add_input(reg);
  reg->add_flag("--check", reg_check, "also compute the rook number by brute force");

  auto* rectangles = app.add_subcommand("rectangles", "maximal rectangles");
  add_input(rectangles);

  auto* derived = app.add_subcommand("derived", "derived sequence");
  add_input(derived);

  auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein criteria");
  add_input(gorenstein);

  auto* classify = app.add_subcommand("classify", "Gorenstein / punctured spectrum classification");
  add_input(classify);

  bool type_closed = false, type_oracle = false, type_both = false;
  int slack = kCompleteBound;
  auto* type = app.add_subcommand("type", "Cohen-Macaulay type");
  add_input(type);
  type->add_flag("--closed", type_closed, "closed formula only");
  type->add_flag("--oracle", type_oracle, "count minimal order-reversing maps only");
  type->add_flag("--both", type_both, "both (default)");
  type->add_option("--slack", slack, "cap the oracle at degree r+1+N (default: exact count)")->check(CLI::Range(0, 4));

  std::string format = "plain", cas_template;
  auto* ideal = app.add_subcommand("ideal", "inner 2-minors of the polyomino ideal");
  add_input(ideal);
  ideal->add_option("--format", format, "plain, json or cas-script");
  ideal->add_option("--template", cas_template, "template name in data/cas or a path (cas-script)");

  std::string style = "ascii";
  auto* render_cmd = app.add_subcommand("render", "draw the polyomino");
  add_input(render_cmd);
  render_cmd->add_option("--style", style, "ascii or svg");

  std::string kind = "l-convex";
  int max_m = 4, max_n = 4, max_q = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list small instances as JSON lines");
  enumerate->add_option("--kind", kind, "l-convex or ferrer")->check(CLI::IsMember({"l-convex", "ferrer"}));
  enumerate->add_option("--max-m", max_m, "bounding box width bound");
  enumerate->add_option("--max-n", max_n, "bounding box height bound");
  enumerate->add_option("--max-q", max_q, "ferrer only: bound on width + height instead of the box");

  VerifyOptions vopt;
  std::string out_path;
  bool list_checks = false;
  auto* verify = app.add_subcommand("verify", "exhaustive property checks, JSON lines report");
  verify->add_option("--checks", vopt.checks, "check ids (comma separated)")->delimiter(',');
  verify->add_option("--max-m", vopt.max_m, "width bound for l-convex and ferrer-box checks");
  verify->add_option("--max-n", vopt.max_n, "height bound for l-convex and ferrer-box checks");
  verify->add_option("--max-q", vopt.max_q, "width + height bound for poset checks");
  verify->add_option("--threads", vopt.threads, "worker threads (0: all cores)");
  verify->add_option("--out", out_path, "report file (default stdout)");
  verify->add_flag("--list", list_checks, "list registered checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) {
      std::vector<Polyomino> items;
      if (kind == "ferrer") items = max_q > 0 ? enumerate_ferrer_semiperimeter(max_q) : enumerate_ferrer(max_m, max_n);
      else items = enumerate_l_convex(max_m, max_n);
      for (const auto& p : items) std::cout << to_json(p).dump() << '\n';
      return kOk;
    }
    if (*verify) {
      if (list_checks) {
        for (const auto& c : registered_checks()) std::cout << c.id << '\t' << c.family << '\t' << c.description << '\n';
        return kOk;
      }
      const VerifyReport report = verify_all(vopt);
      if (out_path.empty()) std::cout << report.to_jsonl();
      else {
        std::ofstream out(out_path, std::ios::app);
        if (!out) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
        out << report.to_jsonl();
      }
      std::cerr << report.records.size() << " records, " << report.failures() << " failures\n";
      return report.all_pass() ? kOk : kVerification;
    }

    const Polyomino p = parse_input(read_input(input));

    if (*validate) {
      print({{"width", p.width()},
             {"height", p.height()},
             {"cells", p.cell_count()},
             {"row_convex", is_row_convex(p)},
             {"column_convex", is_column_convex(p)},
             {"convex", is_convex(p)},
             {"l_convex", is_l_convex(p)},
             {"ferrer", is_ferrer(p)},
             {"rectangle", p.is_rectangle()}});
    } else if (*project) {
      const ProjectionPair pp = projections(p);
      const Polyomino star = ferrer_project(p);
      const ProjectionPair ps = projections(star);
      print({{"H", pp.horizontal}, {"V", pp.vertical}, {"ferrer", {{"H", ps.horizontal}, {"V", ps.vertical}}}});
    } else if (*rooks) {
      if (k >= 0) {
        print({{"k", k}, {"count", rook_count(p, k).str()}});
      } else {
        json counts = json::array();
        for (const auto& c : rook_counts(p)) counts.push_back(c.str());
        print({{"counts", counts}, {"rook_number", static_cast<int>(counts.size()) - 1}});
      }
    } else if (*reg) {
      const Regularity r = regularity_report(p);
      json out = {{"regularity", r.value}, {"row_form", r.row_form}, {"column_form", r.column_form}};
      if (reg_check) out["rook_number"] = rook_number(p);
      print(out);
    } else if (*rectangles) {
      json out = json::array();
      for (const auto& r : maximal_rectangles(p))
        out.push_back({{"x", r.lower_left.x}, {"y", r.lower_left.y}, {"width", r.width}, {"height", r.height}});
      print(out);
    } else if (*derived) {
      json out = json::array();
      for (const auto& q : derived_sequence(p)) out.push_back(to_json(q));
      print(out);
    } else if (*gorenstein) {
      const GorensteinReport g = gorenstein_numeric(p);
      auto vm = [](const ValueMultiplicities& v) {
        return json{{"values", v.values}, {"multiplicities", v.multiplicities}, {"cumulative", v.cumulative}};
      };
      print({{"gorenstein", g.verdict}, {"boxes_square", g.boxes_square}, {"rows", vm(g.rows)}, {"columns", vm(g.columns)}});
    } else if (*classify) {
      const SpectrumReport s = punctured_spectrum_report(p);
      print({{"class", std::string(to_string(s.value))},
             {"ferrer_is_rectangle", s.ferrer_is_rectangle},
             {"components", s.components},
             {"components_pure", s.components_pure}});
    } else if (*type) {
      const bool want_closed = type_closed || type_both || !type_oracle;
      const bool want_oracle = type_oracle || type_both || !type_closed;
      json out = json::object();
      if (want_closed) out["closed"] = closed_to_json(cm_type_closed(p));
      if (want_oracle) {
        const Poset q = join_irreducible_poset(ferrer_project(p));
        const CmTypeOracle o = cm_type_oracle(q, slack);
        out["oracle"] = {{"count", o.count.str()},
                         {"r", o.chain_length},
                         {"degree_bound", o.degree_bound},
                         {"candidates", o.candidates},
                         {"minimal_maps_on_longest_chain", o.minimal_maps_on_longest_chain}};
      }
      print(out);
    } else if (*ideal) {
      std::optional<CasTemplate> t;
      if (format == "cas-script") t = load_cas_template(cas_template.empty() ? "macaulay2" : cas_template);
      std::cout << export_generators(inner_minors(p), polyomino_vertices(p), format, t ? &*t : nullptr);
    } else if (*render_cmd) {
      std::cout << render(p, style) << (style == "ascii" ? "\n" : "");
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
