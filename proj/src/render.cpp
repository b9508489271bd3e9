#include "ribbon/render.hpp"

#include <algorithm>

namespace ribbon {

std::string render_bst(const BorderStripTableau& b) {
    const Partition& shape = b.shape();
    if (shape.empty()) return "";
    std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(shape.rows()));
    for (int r = 1; r <= shape.rows(); ++r)
        grid[static_cast<std::size_t>(r - 1)].assign(static_cast<std::size_t>(shape.part(r)), ".");
    for (int i = 1; i <= b.strip_count(); ++i) {
        Cell tail = b.strip(i).tail();
        grid[static_cast<std::size_t>(tail.row - 1)][static_cast<std::size_t>(tail.col - 1)] =
            std::to_string(i);
    }
    std::size_t width = 1;
    for (const auto& row : grid)
        for (const auto& cell : row) width = std::max(width, cell.size());
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ' ';
            out += std::string(width - row[c].size(), ' ') + row[c];
        }
        out += '\n';
    }
    return out;
}

}  // namespace ribbon
