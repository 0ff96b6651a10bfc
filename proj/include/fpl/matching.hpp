#pragma once

// Exact perfect-matching counting and enumeration on planar regions.
// Counting branches on the lowest-index live vertex and memoizes on the
// live-vertex bitmask, which behaves like a frontier DP when vertices are
// ordered by position.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fpl/region.hpp"

namespace fpl {

namespace detail {

constexpr int kMaxMatchVertices = 256;
using VertexMask = std::array<std::uint64_t, 4>;

struct MaskHash {
    std::size_t operator()(const VertexMask& m) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : m) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

inline bool mask_test(const VertexMask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1; }
inline void mask_clear(VertexMask& m, int i) { m[i >> 6] &= ~(1ULL << (i & 63)); }
inline void mask_set(VertexMask& m, int i) { m[i >> 6] |= 1ULL << (i & 63); }

inline int mask_lowest(const VertexMask& m) {
    for (int w = 0; w < 4; ++w)
        if (m[w]) return w * 64 + __builtin_ctzll(m[w]);
    return -1;
}

}  // namespace detail

// Sum of products of edge values over perfect matchings, in an arbitrary
// commutative ring R; `value` maps each edge to its ring element.
template <typename R>
R count_matchings(const PlanarRegion& region,
                  const std::function<R(const RegionEdge&)>& value,
                  const R& zero, const R& one) {
    const int nv = region.vertex_count();
    if (nv > detail::kMaxMatchVertices) throw std::invalid_argument("region too large");
    if (nv % 2 != 0) return zero;

    std::vector<std::vector<std::pair<int, R>>> adj(nv);
    for (const auto& e : region.edges()) {
        R w = value(e);
        adj[e.u].emplace_back(e.v, w);
        adj[e.v].emplace_back(e.u, w);
    }

    detail::VertexMask all{};
    for (int i = 0; i < nv; ++i) detail::mask_set(all, i);

    std::unordered_map<detail::VertexMask, R, detail::MaskHash> memo;
    std::function<R(const detail::VertexMask&)> go = [&](const detail::VertexMask& alive) -> R {
        int v = detail::mask_lowest(alive);
        if (v == -1) return one;
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;
        R total = zero;
        for (const auto& [u, w] : adj[v]) {
            if (!detail::mask_test(alive, u)) continue;
            detail::VertexMask next = alive;
            detail::mask_clear(next, v);
            detail::mask_clear(next, u);
            total = total + w * go(next);
        }
        memo.emplace(alive, total);
        return total;
    };
    return go(all);
}

inline Rational count_matchings(const PlanarRegion& region) {
    return count_matchings<Rational>(
        region, [](const RegionEdge& e) { return e.weight; }, Rational(0), Rational(1));
}

// Visit every perfect matching once, as a list of edge indices sorted by
// the smaller endpoint; deterministic order.
inline void enumerate_matchings(const PlanarRegion& region,
                                const std::function<void(const std::vector<int>&)>& emit) {
    const int nv = region.vertex_count();
    if (nv > detail::kMaxMatchVertices) throw std::invalid_argument("region too large");
    if (nv % 2 != 0) return;

    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (other endpoint, edge index)
    const auto& edges = region.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        adj[edges[i].u].emplace_back(edges[i].v, i);
        adj[edges[i].v].emplace_back(edges[i].u, i);
    }

    detail::VertexMask alive{};
    for (int i = 0; i < nv; ++i) detail::mask_set(alive, i);
    std::vector<int> chosen;

    std::function<void()> go = [&]() {
        int v = detail::mask_lowest(alive);
        if (v == -1) {
            emit(chosen);
            return;
        }
        for (const auto& [u, idx] : adj[v]) {
            if (!detail::mask_test(alive, u)) continue;
            detail::mask_clear(alive, v);
            detail::mask_clear(alive, u);
            chosen.push_back(idx);
            go();
            chosen.pop_back();
            detail::mask_set(alive, v);
            detail::mask_set(alive, u);
        }
    };
    go();
}

inline BigInt matching_count_integer(const PlanarRegion& region) {
    Rational q = count_matchings(region);
    if (boost::multiprecision::denominator(q) != 1)
        throw std::logic_error("non-integer matching count");
    return BigInt(boost::multiprecision::numerator(q));
}

}  // namespace fpl
