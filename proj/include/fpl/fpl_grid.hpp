#pragma once

// Fully packed loop configurations on the N x N grid: backtracking
// enumeration over vertex local states, coupling extraction, symmetry
// filters and the fixed-edge constraints of the rare-coupling families.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "fpl/coupling.hpp"
#include "fpl/ht_coupling.hpp"
#include "fpl/rational.hpp"
#include "fpl/region.hpp"

namespace fpl {

// Vertices are (c, r): c = column from left, r = row from bottom, 0-based.
// A horizontal edge is (c,r)-(c+1,r) with c in -1..N-1 (c = -1 and c = N-1
// give the west/east boundary stubs); a vertical edge is (c,r)-(c,r+1) with
// r in -1..N-1 likewise.
struct GridEdge {
    int c = 0, r = 0;
    bool vertical = false;

    auto key() const { return std::tuple(vertical, r, c); }
    bool operator==(const GridEdge& o) const { return key() == o.key(); }
    bool operator<(const GridEdge& o) const { return key() < o.key(); }
};

inline GridEdge h_edge(int c, int r) { return {c, r, false}; }
inline GridEdge v_edge(int c, int r) { return {c, r, true}; }

inline bool edge_in_grid(const GridEdge& e, int n) {
    if (e.vertical) return e.c >= 0 && e.c < n && e.r >= -1 && e.r < n;
    return e.r >= 0 && e.r < n && e.c >= -1 && e.c < n;
}

inline bool is_stub(const GridEdge& e, int n) {
    return e.vertical ? (e.r == -1 || e.r == n - 1) : (e.c == -1 || e.c == n - 1);
}

inline GridEdge rotate180(const GridEdge& e, int n) {
    if (e.vertical) return v_edge(n - 1 - e.c, n - 2 - e.r);
    return h_edge(n - 2 - e.c, n - 1 - e.r);
}

// Reflection across the vertical axis.
inline GridEdge mirror_lr(const GridEdge& e, int n) {
    if (e.vertical) return v_edge(n - 1 - e.c, e.r);
    return h_edge(n - 2 - e.c, e.r);
}

// Boundary stubs in counterclockwise order starting at the top-left west
// stub; every other one is occupied ("in"), the first one included.
inline int stub_position(const GridEdge& e, int n) {
    if (!e.vertical && e.c == -1) return n - 1 - e.r;            // left side, top down
    if (e.vertical && e.r == -1) return n + e.c;                 // bottom, left to right
    if (!e.vertical && e.c == n - 1) return 2 * n + e.r;         // right side, bottom up
    if (e.vertical && e.r == n - 1) return 3 * n + (n - 1 - e.c);  // top, right to left
    throw std::invalid_argument("not a boundary stub");
}

inline bool stub_occupied(const GridEdge& e, int n) { return stub_position(e, n) % 2 == 0; }

// Occupied stubs get boundary labels 1..2N in the same counterclockwise order.
inline int stub_label(const GridEdge& e, int n) { return stub_position(e, n) / 2 + 1; }

class FplGrid {
public:
    FplGrid(int n, std::vector<char> h, std::vector<char> v)
        : n_(n), h_(std::move(h)), v_(std::move(v)) {}

    int size() const { return n_; }

    bool has(const GridEdge& e) const {
        return e.vertical ? v_[v_index(e.c, e.r)] != 0 : h_[h_index(e.c, e.r)] != 0;
    }

    int degree(int c, int r) const {
        return has(h_edge(c - 1, r)) + has(h_edge(c, r)) + has(v_edge(c, r - 1)) +
               has(v_edge(c, r));
    }

    std::vector<GridEdge> edges() const {
        std::vector<GridEdge> out;
        for (int r = 0; r < n_; ++r)
            for (int c = -1; c < n_; ++c)
                if (has(h_edge(c, r))) out.push_back(h_edge(c, r));
        for (int c = 0; c < n_; ++c)
            for (int r = -1; r < n_; ++r)
                if (has(v_edge(c, r))) out.push_back(v_edge(c, r));
        return out;
    }

    // Degree-2 everywhere plus the alternating boundary stubs.
    bool valid() const {
        for (int c = 0; c < n_; ++c)
            for (int r = 0; r < n_; ++r)
                if (degree(c, r) != 2) return false;
        for (int r = 0; r < n_; ++r) {
            if (has(h_edge(-1, r)) != stub_occupied(h_edge(-1, r), n_)) return false;
            if (has(h_edge(n_ - 1, r)) != stub_occupied(h_edge(n_ - 1, r), n_)) return false;
        }
        for (int c = 0; c < n_; ++c) {
            if (has(v_edge(c, -1)) != stub_occupied(v_edge(c, -1), n_)) return false;
            if (has(v_edge(c, n_ - 1)) != stub_occupied(v_edge(c, n_ - 1), n_)) return false;
        }
        return true;
    }

    bool operator==(const FplGrid& o) const {
        return n_ == o.n_ && h_ == o.h_ && v_ == o.v_;
    }
    bool operator<(const FplGrid& o) const {
        return std::tie(n_, h_, v_) < std::tie(o.n_, o.h_, o.v_);
    }

    static int h_size(int n) { return n * (n + 1); }
    static int v_size(int n) { return n * (n + 1); }
    int h_index(int c, int r) const { return r * (n_ + 1) + (c + 1); }
    int v_index(int c, int r) const { return c * (n_ + 1) + (r + 1); }

private:
    int n_;
    std::vector<char> h_;  // indexed by h_index
    std::vector<char> v_;  // indexed by v_index
};

inline FplGrid transform_grid(const FplGrid& f, const std::function<GridEdge(GridEdge)>& t) {
    const int n = f.size();
    std::vector<char> h(FplGrid::h_size(n), 0), v(FplGrid::v_size(n), 0);
    FplGrid out(n, std::move(h), std::move(v));
    std::vector<char> h2(FplGrid::h_size(n), 0), v2(FplGrid::v_size(n), 0);
    for (int r = 0; r < n; ++r)
        for (int c = -1; c < n; ++c)
            if (f.has(h_edge(c, r))) {
                GridEdge e = t(h_edge(c, r));
                (e.vertical ? v2[out.v_index(e.c, e.r)] : h2[out.h_index(e.c, e.r)]) = 1;
            }
    for (int c = 0; c < n; ++c)
        for (int r = -1; r < n; ++r)
            if (f.has(v_edge(c, r))) {
                GridEdge e = t(v_edge(c, r));
                (e.vertical ? v2[out.v_index(e.c, e.r)] : h2[out.h_index(e.c, e.r)]) = 1;
            }
    return FplGrid(n, std::move(h2), std::move(v2));
}

inline bool is_half_turn_symmetric(const FplGrid& f) {
    const int n = f.size();
    return f == transform_grid(f, [n](GridEdge e) { return rotate180(e, n); });
}

inline bool is_vertically_symmetric(const FplGrid& f) {
    const int n = f.size();
    return f == transform_grid(f, [n](GridEdge e) { return mirror_lr(e, n); });
}

// Fixed-edge constraint: forced-present edges plus the absences they imply
// at saturated (degree-2) vertices.
struct EdgeConstraint {
    std::map<GridEdge, bool> forced;  // true = present, false = absent

    void force_present(const GridEdge& e) { set(e, true); }
    void force_absent(const GridEdge& e) { set(e, false); }

    std::vector<GridEdge> present() const {
        std::vector<GridEdge> out;
        for (const auto& [e, p] : forced)
            if (p) out.push_back(e);
        return out;
    }

    // Once a vertex has two forced-present edges its other edges are absent.
    void derive_absences(int n) {
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) {
                GridEdge inc[4] = {h_edge(c - 1, r), h_edge(c, r), v_edge(c, r - 1),
                                   v_edge(c, r)};
                int present_count = 0;
                for (const auto& e : inc) {
                    auto it = forced.find(e);
                    if (it != forced.end() && it->second) ++present_count;
                }
                if (present_count < 2) continue;
                for (const auto& e : inc)
                    if (!forced.count(e)) set(e, false);
            }
    }

private:
    void set(const GridEdge& e, bool p) {
        auto [it, inserted] = forced.emplace(e, p);
        if (!inserted && it->second != p)
            throw std::invalid_argument("contradictory edge constraint");
    }
};

enum class GridSymmetry { None, HalfTurn, Mirror };

struct EnumStats {
    bool inconsistent_constraint = false;  // constraint clashed with the boundary
    BigInt count = 0;
};

namespace detail {

class FplEnumerator {
public:
    FplEnumerator(int n, const EdgeConstraint* constraint, GridSymmetry sym,
                  std::function<void(const FplGrid&)> emit)
        : n_(n), sym_(sym), emit_(std::move(emit)),
          h_(FplGrid::h_size(n), -1), v_(FplGrid::v_size(n), -1) {
        for (int r = 0; r < n_; ++r) {
            preset(h_edge(-1, r));
            preset(h_edge(n_ - 1, r));
        }
        for (int c = 0; c < n_; ++c) {
            preset(v_edge(c, -1));
            preset(v_edge(c, n_ - 1));
        }
        if (constraint)
            for (const auto& [e, p] : constraint->forced) {
                if (!edge_in_grid(e, n_)) throw std::invalid_argument("constraint edge off grid");
                int8_t& s = slot(e);
                if (s != -1 && s != (p ? 1 : 0)) {
                    bad_ = true;
                    return;
                }
                s = p ? 1 : 0;
                if (sym_check_fails(e)) {
                    bad_ = true;
                    return;
                }
            }
    }

    EnumStats run() {
        EnumStats st;
        st.inconsistent_constraint = bad_;
        if (!bad_) visit(0, st);
        return st;
    }

private:
    int8_t& slot(const GridEdge& e) {
        return e.vertical ? v_[e.c * (n_ + 1) + e.r + 1] : h_[e.r * (n_ + 1) + e.c + 1];
    }

    void preset(const GridEdge& e) { slot(e) = stub_occupied(e, n_) ? 1 : 0; }

    GridEdge sym_image(const GridEdge& e) const {
        return sym_ == GridSymmetry::HalfTurn ? rotate180(e, n_) : mirror_lr(e, n_);
    }

    bool sym_check_fails(const GridEdge& e) {
        if (sym_ == GridSymmetry::None) return false;
        int8_t other = slot(sym_image(e));
        return other != -1 && other != slot(e);
    }

    // Set an undecided edge; fails (without assigning) on symmetry clash.
    bool try_set(const GridEdge& e, int8_t val) {
        int8_t& s = slot(e);
        s = val;
        if (sym_check_fails(e)) {
            s = -1;
            return false;
        }
        return true;
    }

    void visit(int idx, EnumStats& st) {
        if (idx == n_ * n_) {
            st.count += 1;
            if (emit_) emit_(FplGrid(n_, std::vector<char>(h_.begin(), h_.end()),
                                     std::vector<char>(v_.begin(), v_.end())));
            return;
        }
        const int r = idx / n_, c = idx % n_;
        const int8_t west = slot(h_edge(c - 1, r));
        const int8_t south = slot(v_edge(c, r - 1));
        int known = west + south;
        GridEdge free_edges[2];
        int n_free = 0;
        for (GridEdge e : {h_edge(c, r), v_edge(c, r)}) {
            int8_t s = slot(e);
            if (s == -1)
                free_edges[n_free++] = e;
            else
                known += s;
        }
        const int need = 2 - known;
        if (need < 0 || need > n_free) return;
        switch (n_free) {
            case 0:
                visit(idx + 1, st);
                return;
            case 1:
                if (try_set(free_edges[0], static_cast<int8_t>(need))) {
                    visit(idx + 1, st);
                    slot(free_edges[0]) = -1;
                }
                return;
            case 2:
                if (need == 1) {
                    for (int pick = 0; pick < 2; ++pick) {
                        if (!try_set(free_edges[pick], 1)) continue;
                        if (try_set(free_edges[1 - pick], 0)) {
                            visit(idx + 1, st);
                            slot(free_edges[1 - pick]) = -1;
                        }
                        slot(free_edges[pick]) = -1;
                    }
                } else {
                    const int8_t val = need == 2 ? 1 : 0;
                    if (try_set(free_edges[0], val)) {
                        if (try_set(free_edges[1], val)) {
                            visit(idx + 1, st);
                            slot(free_edges[1]) = -1;
                        }
                        slot(free_edges[0]) = -1;
                    }
                }
                return;
        }
    }

    int n_;
    GridSymmetry sym_;
    std::function<void(const FplGrid&)> emit_;
    std::vector<int8_t> h_, v_;
    bool bad_ = false;
};

}  // namespace detail

// Enumerate every FPL of size n (optionally constrained / symmetric) in a
// fixed scan order; the callback sees each configuration exactly once.
inline EnumStats enumerate_fpls(int n, const std::function<void(const FplGrid&)>& emit,
                                const EdgeConstraint* constraint = nullptr,
                                GridSymmetry sym = GridSymmetry::None) {
    if (n < 1) throw std::invalid_argument("grid size must be positive");
    detail::FplEnumerator en(n, constraint, sym, emit);
    return en.run();
}

inline std::vector<FplGrid> enumerate_fpls(int n, const EdgeConstraint* constraint = nullptr,
                                           GridSymmetry sym = GridSymmetry::None) {
    std::vector<FplGrid> out;
    enumerate_fpls(n, [&](const FplGrid& f) { out.push_back(f); }, constraint, sym);
    return out;
}

// The link pattern of an FPL: follow each open path between occupied stubs.
inline Coupling coupling_of(const FplGrid& f) {
    const int n = f.size();
    std::vector<GridEdge> stub_of_label(2 * n + 1);
    for (int r = 0; r < n; ++r)
        for (GridEdge e : {h_edge(-1, r), h_edge(n - 1, r)})
            if (stub_occupied(e, n)) stub_of_label[stub_label(e, n)] = e;
    for (int c = 0; c < n; ++c)
        for (GridEdge e : {v_edge(c, -1), v_edge(c, n - 1)})
            if (stub_occupied(e, n)) stub_of_label[stub_label(e, n)] = e;

    std::vector<int> partner(2 * n + 1, 0);
    for (int lab = 1; lab <= 2 * n; ++lab) {
        if (partner[lab]) continue;
        // Walk inward from the stub until we exit through another stub.
        GridEdge cur = stub_of_label[lab];
        // Entry vertex of a stub edge.
        int c, r;
        if (!cur.vertical)
            c = cur.c == -1 ? 0 : n - 1, r = cur.r;
        else
            r = cur.r == -1 ? 0 : n - 1, c = cur.c;
        while (true) {
            GridEdge inc[4] = {h_edge(c - 1, r), h_edge(c, r), v_edge(c, r - 1), v_edge(c, r)};
            GridEdge next{};
            bool found = false;
            for (const auto& e : inc)
                if (f.has(e) && !(e == cur)) {
                    next = e;
                    found = true;
                    break;
                }
            if (!found) throw std::logic_error("degree-2 walk broke");
            if (is_stub(next, n)) {
                int lab2 = stub_label(next, n);
                partner[lab] = lab2;
                partner[lab2] = lab;
                break;
            }
            // Step across `next` to its other endpoint.
            if (next.vertical)
                r = next.r == r ? r + 1 : next.r;
            else
                c = next.c == c ? c + 1 : next.c;
            cur = next;
        }
    }
    return Coupling(std::move(partner));
}

inline std::map<Coupling, BigInt> count_by_coupling(int n,
                                                    const EdgeConstraint* constraint = nullptr) {
    std::map<Coupling, BigInt> tally;
    enumerate_fpls(n, [&](const FplGrid& f) { tally[coupling_of(f)] += 1; }, constraint);
    return tally;
}

// Parallel tally. The search space is partitioned by forcing a small set of
// early edges to every present/absent pattern; workers enumerate disjoint
// shares and the sorted tallies are merged. The merged map is the same for
// every worker count, so downstream reports are byte-identical.
inline std::map<Coupling, BigInt> count_by_coupling(int n, int workers,
                                                    const EdgeConstraint* constraint) {
    if (workers < 1) throw std::invalid_argument("need at least one worker");
    if (workers == 1) return count_by_coupling(n, constraint);
    std::vector<GridEdge> splitters;
    for (int c = 0; c + 1 < n && static_cast<int>(splitters.size()) < 8; ++c)
        splitters.push_back(h_edge(c, 0));
    int k = 0;
    while ((1 << k) < workers && k < static_cast<int>(splitters.size())) ++k;
    const int masks = 1 << k;

    std::vector<std::map<Coupling, BigInt>> partial(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int mask = w; mask < masks; mask += workers) {
                EdgeConstraint ec = constraint ? *constraint : EdgeConstraint{};
                try {
                    for (int b = 0; b < k; ++b)
                        ((mask >> b) & 1) ? ec.force_present(splitters[b])
                                          : ec.force_absent(splitters[b]);
                } catch (const std::invalid_argument&) {
                    continue;  // pattern contradicts the base constraint: empty share
                }
                enumerate_fpls(
                    n, [&](const FplGrid& f) { partial[w][coupling_of(f)] += 1; }, &ec);
            }
        });
    for (auto& t : pool) t.join();
    std::map<Coupling, BigInt> tally;
    for (const auto& m : partial)
        for (const auto& [c, v] : m) tally[c] += v;
    return tally;
}

inline std::map<HtCoupling, BigInt> count_ht_by_coupling(
    int n, const EdgeConstraint* constraint = nullptr) {
    std::map<HtCoupling, BigInt> tally;
    enumerate_fpls(
        n, [&](const FplGrid& f) { tally[HtCoupling(coupling_of(f))] += 1; }, constraint,
        GridSymmetry::HalfTurn);
    return tally;
}

// Fixed edges selecting the punctured-pi0 coupling family on the 2n grid:
// one wedge of horizontal edges plus one wedge of vertical edges, closed
// under the half-turn. Edges with c = -1 (or r = -1) are occupied boundary
// stubs and are listed for completeness.
inline EdgeConstraint fixed_edges_even(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    const int N = 2 * n;
    EdgeConstraint ec;
    auto add_pair = [&](const GridEdge& e) {
        ec.force_present(e);
        ec.force_present(rotate180(e, N));
    };
    for (int r = 0; r < N; ++r)
        for (int c = -1; c < N - 1; ++c)
            if ((c + r) % 2 == 0 && r > c && c + r < N - 1) add_pair(h_edge(c, r));
    for (int c = 0; c < N; ++c)
        for (int r = -1; r < N - 1; ++r)
            if (std::abs(c + r) % 2 == 1 && c > r && c + r < N - 1) add_pair(v_edge(c, r));
    ec.derive_absences(N);
    return ec;
}

// Odd-size analogue on the (2n+1) grid; parities swap and the two middle
// horizontal edges force the center vertex, which is exactly the diameter
// of the slit couplings.
inline EdgeConstraint fixed_edges_odd(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    const int N = 2 * n + 1;
    EdgeConstraint ec;
    auto add_pair = [&](const GridEdge& e) {
        ec.force_present(e);
        ec.force_present(rotate180(e, N));
    };
    for (int r = 0; r < N; ++r)
        for (int c = -1; c < N - 1; ++c)
            if (std::abs(c + r) % 2 == 1 && r > c && c + r < N - 1) add_pair(h_edge(c, r));
    for (int c = 0; c < N; ++c)
        for (int r = -1; r < N - 1; ++r)
            if ((c + r) % 2 == 0 && c > r && c + r < N - 1) add_pair(v_edge(c, r));
    ec.derive_absences(N);
    return ec;
}

// Internal edges left undetermined by the fixed-edge family, folded by the
// half-turn. For even sizes every vertex carries one fixed edge and every
// vertex orbit has two elements; for odd sizes the center vertex is already
// saturated by the two middle fixed edges and is dropped. The matchings of
// the result are in bijection with the constrained FPLs.
inline PlanarRegion nonfixed_quotient_graph(int n, bool odd,
                                            std::map<GridEdge, int>* edge_index = nullptr) {
    const int N = odd ? 2 * n + 1 : 2 * n;
    EdgeConstraint ec = odd ? fixed_edges_odd(n) : fixed_edges_even(n);

    auto vid = [&](int c, int r) { return r * N + c; };
    auto rot_v = [&](int v) {
        int c = v % N, r = v / N;
        return vid(N - 1 - c, N - 1 - r);
    };
    const int center = odd ? vid(n, n) : -1;

    // Orbit representatives, ordered by (r, c) of the smaller member.
    std::vector<int> orbit(N * N, -1);
    PlanarRegion region;
    for (int v = 0; v < N * N; ++v) {
        if (v == center || orbit[v] != -1) continue;
        int w = rot_v(v);
        int id = region.add_vertex("(" + std::to_string(v % N) + "," + std::to_string(v / N) +
                                   ")");
        orbit[v] = id;
        orbit[w] = id;
    }

    std::set<GridEdge> seen;  // one edge per half-turn edge orbit
    auto consider = [&](const GridEdge& e) {
        if (is_stub(e, N) || ec.forced.count(e)) return;
        int u = vid(e.c, e.r);
        int v = e.vertical ? vid(e.c, e.r + 1) : vid(e.c + 1, e.r);
        if (u == center || v == center) return;
        GridEdge img = rotate180(e, N);
        if (!seen.insert(std::min(e, img)).second) return;
        int idx = static_cast<int>(region.edges().size());
        region.add_edge(orbit[u], orbit[v]);
        if (edge_index) {
            (*edge_index)[e] = idx;
            (*edge_index)[img] = idx;
        }
    };
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N - 1; ++c) consider(h_edge(c, r));
    for (int c = 0; c < N; ++c)
        for (int r = 0; r < N - 1; ++r) consider(v_edge(c, r));
    return region;
}

}  // namespace fpl
