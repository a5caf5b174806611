#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lconvex/polyomino.hpp"

namespace lconvex {

// {"cells": [[x, y], ...]} or {"H": [...], "V": [...]} with H read top to
// bottom and V left to right. Throws ParseError, NoRealization, Disconnected.
Polyomino parse_input(std::string_view text);

// style "ascii": '#' per cell and '.' elsewhere, rows top to bottom, no
// trailing newline. style "svg": unit squares plus the bounding box.
// Throws UnknownStyle.
std::string render(const Polyomino& p, std::string_view style);

// Cells, bounding box and projections.
nlohmann::json to_json(const Polyomino& p);

}  // namespace lconvex
