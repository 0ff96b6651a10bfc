#pragma once

// Weighted bipartite planar regions: the common substrate for honeycomb
// dimer counts and for the non-fixed-edge quotients of FPL grids.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpl/rational.hpp"

namespace fpl {

struct RegionEdge {
    int u = 0, v = 0;
    Rational weight = 1;
    std::string tag;  // optional symbolic label ("x", "y", or empty)
};

class PlanarRegion {
public:
    PlanarRegion() = default;

    int add_vertex(std::string name) {
        names_.push_back(std::move(name));
        return static_cast<int>(names_.size()) - 1;
    }

    void add_edge(int u, int v, Rational weight = 1, std::string tag = {}) {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v)
            throw std::invalid_argument("bad edge endpoints");
        edges_.push_back({u, v, std::move(weight), std::move(tag)});
    }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::vector<RegionEdge>& edges() const { return edges_; }

    // Two-color check; returns the color classes or throws if some edge is
    // monochromatic.
    std::vector<int> bipartition() const {
        std::vector<int> color(vertex_count(), -1);
        std::vector<std::vector<int>> adj(vertex_count());
        for (const auto& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        for (int s = 0; s < vertex_count(); ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[v]) {
                    if (color[w] == -1) {
                        color[w] = 1 - color[v];
                        stack.push_back(w);
                    } else if (color[w] == color[v]) {
                        throw std::logic_error("region is not bipartite");
                    }
                }
            }
        }
        return color;
    }

    // One line per edge: "name1 - name2" with optional " w=p/q" / " tag=x".
    std::string str() const {
        std::vector<std::string> lines;
        for (const auto& e : edges_) {
            std::ostringstream os;
            os << names_[e.u] << " - " << names_[e.v];
            if (e.weight != 1) os << " w=" << to_string(e.weight);
            if (!e.tag.empty()) os << " tag=" << e.tag;
            lines.push_back(os.str());
        }
        std::sort(lines.begin(), lines.end());
        std::string out;
        for (const auto& l : lines) {
            out += l;
            out += '\n';
        }
        return out;
    }

private:
    std::vector<std::string> names_;
    std::vector<RegionEdge> edges_;
};

}  // namespace fpl
