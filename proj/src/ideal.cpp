#include "lconvex/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lconvex/error.hpp"
#include "lconvex/graphs.hpp"

namespace lconvex {

std::string variable_name(Vertex v) { return "x_" + std::to_string(v.x) + "_" + std::to_string(v.y); }

std::string to_string(const BinomialGenerator& g) {
  return variable_name(g.a) + "*" + variable_name(g.b) + " - " + variable_name(g.c) + "*" + variable_name(g.d);
}

std::vector<Vertex> polyomino_vertices(const Polyomino& p) {
  std::vector<Vertex> out;
  for (int x = 0; x <= p.width(); ++x)
    for (int y = 0; y <= p.height(); ++y)
      if (p.contains(x - 1, y - 1) || p.contains(x, y - 1) || p.contains(x - 1, y) || p.contains(x, y))
        out.push_back({x, y});
  return out;
}

std::vector<BinomialGenerator> inner_minors(const Polyomino& p) {
  const int m = p.width(), n = p.height();
  // prefix[x][y] = cells in [0, x) x [0, y).
  std::vector<std::vector<int>> prefix(m + 1, std::vector<int>(n + 1, 0));
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= n; ++y)
      prefix[x][y] = prefix[x - 1][y] + prefix[x][y - 1] - prefix[x - 1][y - 1] + (p.contains(x - 1, y - 1) ? 1 : 0);
  auto cells_in = [&](int i, int j, int k, int l) {
    return prefix[k][l] - prefix[i][l] - prefix[k][j] + prefix[i][j];
  };
  std::vector<BinomialGenerator> out;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = i + 1; k <= m; ++k)
        for (int l = j + 1; l <= n; ++l)
          if (cells_in(i, j, k, l) == (k - i) * (l - j)) out.push_back({{i, j}, {k, l}, {i, l}, {k, j}});
  return out;
}

EdgeRingPresentation edge_ring_presentation(const Polyomino& p) {
  const BipartiteGraph g = vertex_graph(p);  // throws NotConvex
  EdgeRingPresentation ring;
  ring.m = p.width();
  ring.n = p.height();
  for (int i = 0; i <= ring.m; ++i) ring.variables.push_back("u_" + std::to_string(i));
  for (int j = 0; j <= ring.n; ++j) ring.variables.push_back("w_" + std::to_string(j));
  for (Vertex v : polyomino_vertices(p)) {
    // The vertex graph numbers horizontal lines from the top.
    if (!g.has_edge(v.x, ring.n - v.y)) {
      inconsistency("vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                    ") is not on a pair of meeting intervals");
    }
    ring.images.push_back({v, v.x, v.y});
  }
  return ring;
}

namespace {

const EdgeRingPresentation::Image* find_image(const EdgeRingPresentation& ring, Vertex v) {
  auto it = std::lower_bound(ring.images.begin(), ring.images.end(), v,
                             [](const EdgeRingPresentation::Image& img, Vertex key) { return img.vertex < key; });
  if (it == ring.images.end() || it->vertex != v) return nullptr;
  return &*it;
}

// Exponent vector of the image of x_p * x_q.
std::vector<int> image_monomial(const EdgeRingPresentation& ring, Vertex p, Vertex q) {
  std::vector<int> exps(ring.variables.size(), 0);
  for (Vertex v : {p, q}) {
    const auto* img = find_image(ring, v);
    if (!img) throw Error(ErrorKind::ParseError, "vertex " + variable_name(v) + " is not a vertex of P");
    ++exps[img->column];
    ++exps[ring.m + 1 + img->row];
  }
  return exps;
}

}  // namespace

bool vanishes(const EdgeRingPresentation& ring, const BinomialGenerator& g) {
  return image_monomial(ring, g.a, g.b) == image_monomial(ring, g.c, g.d);
}

std::string data_directory() {
  if (const char* env = std::getenv("LCONVEX_DATA_DIR")) return env;
  return LCONVEX_DATA_DIR;
}

CasTemplate parse_cas_template(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("template: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "template must be a JSON object");
  CasTemplate t;
  t.name = j.value("name", "");
  t.header = j.value("header", "");
  t.item_prefix = j.value("item_prefix", "");
  t.separator = j.value("separator", ",\n");
  t.empty_body = j.value("empty_body", "");
  t.footer = j.value("footer", "");
  return t;
}

CasTemplate load_cas_template(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  fs::path path = name_or_path;
  if (!fs::is_regular_file(path)) path = fs::path(data_directory()) / "cas" / (name_or_path + ".json");
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::UnknownFormat, "no computer-algebra template named '" + name_or_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cas_template(buf.str());
}

namespace {

std::string replace_all(std::string text, std::string_view key, const std::string& value) {
  for (std::size_t pos = 0; (pos = text.find(key, pos)) != std::string::npos; pos += value.size())
    text.replace(pos, key.size(), value);
  return text;
}

nlohmann::json corner(Vertex v) { return nlohmann::json::array({v.x, v.y}); }

}  // namespace

std::string export_generators(const std::vector<BinomialGenerator>& gens, const std::vector<Vertex>& variables,
                              std::string_view format, const CasTemplate* cas) {
  std::ostringstream os;
  if (format == "plain") {
    for (const auto& g : gens) os << to_string(g) << '\n';
    return os.str();
  }
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::object();
    nlohmann::json vars = nlohmann::json::array();
    for (Vertex v : variables) vars.push_back(variable_name(v));
    nlohmann::json items = nlohmann::json::array();
    for (const auto& g : gens) {
      items.push_back({{"a", corner(g.a)},
                       {"b", corner(g.b)},
                       {"c", corner(g.c)},
                       {"d", corner(g.d)},
                       {"binomial", to_string(g)}});
    }
    doc["variables"] = std::move(vars);
    doc["generators"] = std::move(items);
    return doc.dump(2) + "\n";
  }
  if (format == "cas-script") {
    const CasTemplate fallback = load_cas_template("macaulay2");
    const CasTemplate& t = cas ? *cas : fallback;
    std::string names;
    for (std::size_t k = 0; k < variables.size(); ++k) names += (k ? ", " : "") + variable_name(variables[k]);
    os << replace_all(t.header, "{{variables}}", names);
    if (gens.empty()) os << t.empty_body;
    for (std::size_t k = 0; k < gens.size(); ++k) os << (k ? t.separator : "") << t.item_prefix << to_string(gens[k]);
    os << t.footer;
    return os.str();
  }
  throw Error(ErrorKind::UnknownFormat, "unknown export format '" + std::string(format) + "'");
}

}  // namespace lconvex
