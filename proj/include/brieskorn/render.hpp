#pragma once

#include <map>
#include <string>
#include <utility>

#include "brieskorn/floer.hpp"

namespace brieskorn {

// ASCII rendering of the first page: rows are q (descending), columns the
// nonempty p values (ascending, gaps compressed). Cells show the rank at
// (p, q = total - p), '.' when empty. Whitespace-token based, so it can be
// parsed back losslessly by parse_grid.
std::string render_grid(const E1Page& page);

// Inverse of render_grid: sparse (p, q) -> rank entries.
std::map<std::pair<long long, long long>, Int> parse_grid(const std::string& text);

// The same sparse entries directly from the page, for round-trip checks.
std::map<std::pair<long long, long long>, Int> sparse_entries(const E1Page& page);

}  // namespace brieskorn
