#pragma once

// Honeycomb regions: regular hexagons (lozenge tilings = plane partitions),
// their 120-degree rotation quotients, the glued region G_n, and the
// staircase region whose weighted tilings the LGV determinant computes.
//
// Triangular-lattice conventions (axial coordinates): lattice points (u,v);
// the up-triangle U(u,v) has corners (u,v),(u+1,v),(u,v+1) and the
// down-triangle D(u,v) has corners (u+1,v),(u,v+1),(u+1,v+1). Honeycomb
// vertices are triangles; honeycomb edges join triangles sharing a side.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpl/matching.hpp"
#include "fpl/rational.hpp"
#include "fpl/region.hpp"

namespace fpl {

struct Triangle {
    bool up = true;
    int u = 0, v = 0;
    auto key() const { return std::tuple(up, u, v); }
    bool operator<(const Triangle& o) const { return key() < o.key(); }
    bool operator==(const Triangle& o) const { return key() == o.key(); }
    std::string str() const {
        return std::string(up ? "U(" : "D(") + std::to_string(u) + "," + std::to_string(v) + ")";
    }
};

// The three down-neighbors of an up-triangle.
inline std::vector<Triangle> up_neighbors(const Triangle& t) {
    return {{false, t.u, t.v}, {false, t.u - 1, t.v}, {false, t.u, t.v - 1}};
}

// 120-degree rotation about the hexagon center: points (u,v) -> (-u-v, u).
inline Triangle rotate120(const Triangle& t) {
    if (t.up) return {true, -t.u - t.v - 1, t.u};
    return {false, -t.u - t.v - 2, t.u};
}

inline bool point_in_hexagon(int u, int v, int a) {
    return u >= -a && u <= a && v >= -a && v <= a && u + v >= -a && u + v <= a;
}

inline bool triangle_in_hexagon(const Triangle& t, int a) {
    if (t.up)
        return point_in_hexagon(t.u, t.v, a) && point_in_hexagon(t.u + 1, t.v, a) &&
               point_in_hexagon(t.u, t.v + 1, a);
    return point_in_hexagon(t.u + 1, t.v, a) && point_in_hexagon(t.u, t.v + 1, a) &&
           point_in_hexagon(t.u + 1, t.v + 1, a);
}

inline std::vector<Triangle> hexagon_triangles(int a) {
    std::vector<Triangle> out;
    for (int up = 1; up >= 0; --up)
        for (int u = -a - 1; u <= a; ++u)
            for (int v = -a - 1; v <= a; ++v) {
                Triangle t{up == 1, u, v};
                if (triangle_in_hexagon(t, a)) out.push_back(t);
            }
    std::sort(out.begin(), out.end());
    return out;
}

// Honeycomb graph of the side-a regular hexagon (6a^2 vertices); its
// perfect matchings are the lozenge tilings, i.e. plane partitions in the
// a*a*a box.
inline PlanarRegion hexagon_region(int a) {
    if (a < 0) throw std::invalid_argument("side must be nonnegative");
    auto tris = hexagon_triangles(a);
    std::map<Triangle, int> id;
    PlanarRegion region;
    for (const auto& t : tris) id[t] = region.add_vertex(t.str());
    for (const auto& t : tris) {
        if (!t.up) continue;
        for (const auto& d : up_neighbors(t)) {
            auto it = id.find(d);
            if (it != id.end()) region.add_edge(id[t], it->second);
        }
    }
    return region;
}

// Quotient of the side-a hexagon honeycomb under the 120-degree rotation;
// every triangle orbit and every edge orbit has three elements (the center
// is a lattice point, fixed by no triangle).
inline PlanarRegion hexagon_quotient(
    int a, std::vector<std::pair<Triangle, Triangle>>* edge_reps = nullptr) {
    auto tris = hexagon_triangles(a);
    std::map<Triangle, int> orb;
    PlanarRegion region;
    for (const auto& t : tris) {
        if (orb.count(t)) continue;
        int id = region.add_vertex(t.str());
        Triangle s = t;
        for (int k = 0; k < 3; ++k) {
            orb[s] = id;
            s = rotate120(s);
        }
    }
    std::set<std::pair<Triangle, Triangle>> seen;
    for (const auto& t : tris) {
        if (!t.up) continue;
        for (const auto& d : up_neighbors(t)) {
            if (!orb.count(d)) continue;
            // Canonical representative of the edge orbit.
            std::pair<Triangle, Triangle> rep{t, d};
            Triangle a1 = t, b1 = d;
            for (int k = 0; k < 2; ++k) {
                a1 = rotate120(a1);
                b1 = rotate120(b1);
                rep = std::min(rep, {a1, b1});
            }
            if (!seen.insert(rep).second) continue;
            region.add_edge(orb.at(t), orb.at(d));
            if (edge_reps) edge_reps->push_back({t, d});
        }
    }
    return region;
}

// All matchings of the side-a hexagon invariant under the 120-degree
// rotation, computed both by filtering full enumeration and by counting
// matchings of the quotient; the two must agree.
inline BigInt rotation_invariant_tilings(int a) {
    PlanarRegion hex = hexagon_region(a);
    auto tris = hexagon_triangles(a);
    // Edge list of hex in construction order, as triangle pairs.
    std::vector<std::pair<Triangle, Triangle>> edge_tris;
    {
        std::map<Triangle, int> id;
        for (const auto& t : tris) id[t] = static_cast<int>(id.size());
        for (const auto& t : tris) {
            if (!t.up) continue;
            for (const auto& d : up_neighbors(t))
                if (id.count(d)) edge_tris.emplace_back(t, d);
        }
    }
    BigInt filtered = 0;
    enumerate_matchings(hex, [&](const std::vector<int>& chosen) {
        std::set<std::pair<Triangle, Triangle>> cur;
        for (int idx : chosen) cur.insert(edge_tris[idx]);
        for (const auto& [t, d] : cur)
            if (!cur.count({rotate120(t), rotate120(d)})) return;
        filtered += 1;
    });
    BigInt quotient = matching_count_integer(hexagon_quotient(a));
    if (filtered != quotient)
        throw std::logic_error("rotation-invariant tiling counts disagree");
    return filtered;
}

// ---------------------------------------------------------------------------
// The glued region G_n: a triangulated (n+1) x n parallelogram of cells,
// each split into an upper-left and lower-right triangle, with the top row
// of cell sides glued to the left column.
// Lattice points are P(a,b), a in 0..n+1, b in 0..n; cell (a,b) for a in
// 0..n, b in 0..n-1 yields triangles
//   UL(a,b) = {P(a,b), P(a,b+1), P(a+1,b+1)}
//   LR(a,b) = {P(a,b), P(a+1,b), P(a+1,b+1)}.
inline PlanarRegion region_g(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    PlanarRegion region;
    auto name = [](const char* kind, int a, int b) {
        return std::string(kind) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    std::map<std::pair<int, int>, int> ul, lr;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b < n; ++b) {
            ul[{a, b}] = region.add_vertex(name("UL", a, b));
            lr[{a, b}] = region.add_vertex(name("LR", a, b));
        }
    auto link = [&](int u, int v) { region.add_edge(u, v); };
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b < n; ++b) {
            link(ul[{a, b}], lr[{a, b}]);  // cell diagonal
            if (a + 1 <= n) link(ul[{a + 1, b}], lr[{a, b}]);  // shared vertical side
            if (b + 1 < n) link(ul[{a, b}], lr[{a, b + 1}]);   // shared slanted side
        }
    // Gluing: side P(a,0)-P(a+1,0) identified with side P(0,a-1)-P(0,a).
    for (int a = 1; a <= n; ++a) link(lr[{a, 0}], ul[{0, a - 1}]);
    return region;
}

// ---------------------------------------------------------------------------
// Staircase region of the LGV determinant. Lattice points (a,b) with
// a in 0..2n and floor(a/2) <= b <= min(l+1+2a, l+2n); triangles
//   A(a,b) = {(a,b),(a+1,b),(a+1,b+1)}, B(a,b) = {(a,b),(a,b+1),(a+1,b+1)}
// (all corners must lie in the region). Adjacent pairs: A(a,b)-B(a,b),
// A(a,b)-B(a+1,b) and A(a,b)-B(a,b-1). The lozenge across the vertical
// side ((2i-1,i-1),(2i-1,i)) carries weight x (i = 1..n); the lozenge
// across the slanted side ((i,l+1+2i),(i+1,l+1+2i)) carries weight y
// (i = 0..n-1).
inline PlanarRegion region_Rl(int n, int l, const Rational& x, const Rational& y) {
    if (n < 0 || l < 0) throw std::invalid_argument("need n, l >= 0");
    auto inside = [&](int a, int b) {
        return a >= 0 && a <= 2 * n && b >= a / 2 && b <= std::min(l + 1 + 2 * a, l + 2 * n);
    };
    auto tri_a = [&](int a, int b) {
        return inside(a, b) && inside(a + 1, b) && inside(a + 1, b + 1);
    };
    auto tri_b = [&](int a, int b) {
        return inside(a, b) && inside(a, b + 1) && inside(a + 1, b + 1);
    };
    std::map<std::pair<int, int>, int> ida, idb;
    PlanarRegion region;
    for (int a = 0; a <= 2 * n; ++a)
        for (int b = 0; b <= l + 2 * n + 1; ++b) {
            if (tri_a(a, b))
                ida[{a, b}] = region.add_vertex("A(" + std::to_string(a) + "," +
                                                std::to_string(b) + ")");
            if (tri_b(a, b))
                idb[{a, b}] = region.add_vertex("B(" + std::to_string(a) + "," +
                                                std::to_string(b) + ")");
        }
    // Weighted lattice sides, keyed by the B-triangle they border.
    std::map<std::pair<int, int>, std::pair<Rational, std::string>> vert_weight, slant_weight;
    for (int i = 1; i <= n; ++i) vert_weight[{2 * i - 1, i - 1}] = {x, "x"};
    for (int i = 0; i < n; ++i) slant_weight[{i, l + 1 + 2 * i}] = {y, "y"};
    for (const auto& [ab, u] : ida) {
        auto [a, b] = ab;
        struct Nb {
            std::pair<int, int> b_tri;
            const std::map<std::pair<int, int>, std::pair<Rational, std::string>>* wmap;
            std::pair<int, int> wkey;
        };
        // A(a,b)-B(a+1,b) crosses the vertical side ((a+1,b),(a+1,b+1));
        // A(a,b)-B(a,b-1) crosses the slanted side ((a,b),(a+1,b)).
        Nb nbs[3] = {{{a, b}, nullptr, {}},
                     {{a + 1, b}, &vert_weight, {a + 1, b}},
                     {{a, b - 1}, &slant_weight, {a, b}}};
        for (const auto& nb : nbs) {
            auto it = idb.find(nb.b_tri);
            if (it == idb.end()) continue;
            Rational w = 1;
            std::string tag;
            if (nb.wmap) {
                auto wit = nb.wmap->find(nb.wkey);
                if (wit != nb.wmap->end()) {
                    w = wit->second.first;
                    tag = wit->second.second;
                }
            }
            region.add_edge(u, it->second, w, tag);
        }
    }
    return region;
}

inline PlanarRegion region_r(int k, const Rational& x, const Rational& y) {
    return region_Rl(k, 0, x, y);
}
inline PlanarRegion region_rprime(int k, const Rational& x, const Rational& y) {
    return region_Rl(k, 1, x, y);
}

}  // namespace fpl
