#include "lconvex/io.hpp"

#include <sstream>

#include "lconvex/error.hpp"
#include "lconvex/projection.hpp"

namespace lconvex {

namespace {

std::vector<int> int_array(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string("'") + field + "' must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, std::string("'") + field + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Polyomino parse_input(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "input must be a JSON object");
  if (doc.contains("cells")) {
    const auto& cells = doc["cells"];
    if (!cells.is_array()) throw Error(ErrorKind::ParseError, "'cells' must be an array of [x, y] pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& c : cells) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
        throw Error(ErrorKind::ParseError, "each cell must be an [x, y] pair of integers");
      }
      pairs.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return Polyomino::from_cells(pairs);
  }
  if (doc.contains("H") && doc.contains("V")) {
    ProjectionPair pp{int_array(doc["H"], "H"), int_array(doc["V"], "V")};
    return reconstruct_l_convex(pp);
  }
  throw Error(ErrorKind::ParseError, "expected either 'cells' or both 'H' and 'V'");
}

std::string render(const Polyomino& p, std::string_view style) {
  std::ostringstream os;
  if (style == "ascii") {
    for (int y = p.height() - 1; y >= 0; --y) {
      for (int x = 0; x < p.width(); ++x) os << (p.contains(x, y) ? '#' : '.');
      if (y > 0) os << '\n';
    }
    return os.str();
  }
  if (style == "svg") {
    constexpr int unit = 20;
    constexpr int margin = 2;
    const int w = p.width() * unit + 2 * margin, h = p.height() * unit + 2 * margin;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
       << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << p.width() * unit << "\" height=\""
       << p.height() * unit << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 2\"/>\n";
    for (const Cell& c : p.cells()) {
      os << "  <rect x=\"" << margin + c.x * unit << "\" y=\"" << margin + (p.height() - 1 - c.y) * unit
         << "\" width=\"" << unit << "\" height=\"" << unit << "\" fill=\"#d0d0d0\" stroke=\"#000000\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
  }
  throw Error(ErrorKind::UnknownStyle, "unknown render style '" + std::string(style) + "'");
}

nlohmann::json to_json(const Polyomino& p) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : p.cells()) cells.push_back({c.x, c.y});
  const ProjectionPair pp = projections(p);
  return {{"cells", cells}, {"width", p.width()}, {"height", p.height()}, {"H", pp.horizontal}, {"V", pp.vertical}};
}

}  // namespace lconvex
