#pragma once

#include <string>

#include "ribbon/tableaux.hpp"

namespace ribbon {

// Text rendering of a border strip tableau: one line per diagram row,
// labels only in the tail cells of the strips, a dot everywhere else.
std::string render_bst(const BorderStripTableau& b);

}  // namespace ribbon
