#pragma once

// Plain-text edge-list fixtures: one "(x1,y1)-(x2,y2)" per line, unit-length
// axis-parallel segments in fixture coordinates: the grid's shifted by one,
// so stubs (grid c or r = -1) land on nonnegative coordinates.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpl/fpl_grid.hpp"

namespace fpl {

inline std::vector<GridEdge> read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture: " + path);
    std::vector<GridEdge> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int x1, y1, x2, y2;
        if (std::sscanf(line.c_str(), "(%d,%d)-(%d,%d)", &x1, &y1, &x2, &y2) != 4)
            throw std::runtime_error("bad fixture line: " + line);
        if (x2 - x1 + (y2 - y1) != 1 || (x1 != x2 && y1 != y2))
            throw std::runtime_error("not a unit edge: " + line);
        int c = x1 - 1, r = y1 - 1;
        out.push_back(x1 == x2 ? v_edge(c, r) : h_edge(c, r));
    }
    return out;
}

inline std::string edge_list_string(std::vector<GridEdge> edges) {
    std::vector<std::string> lines;
    for (const auto& e : edges) {
        int x1 = e.c + 1, y1 = e.r + 1;
        int x2 = x1 + (e.vertical ? 0 : 1), y2 = y1 + (e.vertical ? 1 : 0);
        lines.push_back("(" + std::to_string(x1) + "," + std::to_string(y1) + ")-(" +
                        std::to_string(x2) + "," + std::to_string(y2) + ")");
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

inline FplGrid grid_from_edges(int n, const std::vector<GridEdge>& edges) {
    std::vector<char> h((n + 1) * n, 0), v((n + 1) * n, 0);
    for (const auto& e : edges) {
        if (!edge_in_grid(e, n)) throw std::invalid_argument("edge outside grid");
        if (e.vertical)
            v[e.c * (n + 1) + e.r + 1] = 1;
        else
            h[e.r * (n + 1) + e.c + 1] = 1;
    }
    return FplGrid(n, std::move(h), std::move(v));
}

}  // namespace fpl
