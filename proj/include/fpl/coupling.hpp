#pragma once

// Plane couplings (noncrossing link patterns) and the Temperley-Lieb
// rewiring action. Boundary points are 1-based, counterclockwise,
// starting at the top-left endpoint.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpl {

namespace detail {

inline void check_matching(const std::vector<int>& partner) {
    const int m = static_cast<int>(partner.size()) - 1;  // points
    for (int i = 1; i <= m; ++i) {
        int j = partner[i];
        if (j < 1 || j > m || j == i)
            throw std::invalid_argument("partner array is not a fixed-point-free map");
        if (partner[j] != i)
            throw std::invalid_argument("partner array is not an involution");
    }
    // Noncrossing: no i < k < j < l with pairs {i,j}, {k,l}.
    for (int i = 1; i <= m; ++i) {
        int j = partner[i];
        if (j < i) continue;
        for (int k = i + 1; k < j; ++k) {
            int l = partner[k];
            if (l < i || l > j) throw std::invalid_argument("coupling has crossing pairs");
        }
    }
}

}  // namespace detail

class Coupling {
public:
    // partner has length 2N+1; slot 0 is unused.
    explicit Coupling(std::vector<int> partner) : part_(std::move(partner)) {
        if (part_.empty() || part_.size() % 2 == 0)
            throw std::invalid_argument("partner array must hold an even number of points");
        detail::check_matching(part_);
    }

    static Coupling from_pairs(int n_arcs, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<int> p(2 * n_arcs + 1, 0);
        for (auto [a, b] : pairs) {
            if (a < 1 || a > 2 * n_arcs || b < 1 || b > 2 * n_arcs || p[a] || p[b])
                throw std::invalid_argument("bad pair list");
            p[a] = b;
            p[b] = a;
        }
        return Coupling(std::move(p));
    }

    int size() const { return (static_cast<int>(part_.size()) - 1) / 2; }  // number of arcs
    int points() const { return static_cast<int>(part_.size()) - 1; }
    int partner(int i) const { return part_[i]; }
    const std::vector<int>& partner_array() const { return part_; }

    bool operator==(const Coupling& o) const { return part_ == o.part_; }
    bool operator<(const Coupling& o) const { return part_ < o.part_; }

    // Canonical text form: sorted pair list "(1,4)(2,3)".
    std::string str() const {
        std::string s;
        for (int i = 1; i <= points(); ++i)
            if (part_[i] > i)
                s += "(" + std::to_string(i) + "," + std::to_string(part_[i]) + ")";
        return s;
    }

    // Relabel i -> i + r (mod 2N).
    Coupling rotated(int r) const {
        const int m = points();
        auto shift = [&](int i) { return (i - 1 + r % m + m) % m + 1; };
        std::vector<int> p(m + 1, 0);
        for (int i = 1; i <= m; ++i) p[shift(i)] = shift(part_[i]);
        return Coupling(std::move(p));
    }

private:
    std::vector<int> part_;
};

// All-parallel-arches coupling {{i, 2n+1-i}}.
inline Coupling pi0(int n) {
    std::vector<int> p(2 * n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[i] = 2 * n + 1 - i;
        p[2 * n + 1 - i] = i;
    }
    return Coupling(std::move(p));
}

namespace detail {

inline void enumerate_matchings_rec(std::vector<int>& p, int first,
                                    std::vector<Coupling>& out) {
    const int m = static_cast<int>(p.size()) - 1;
    while (first <= m && p[first] != 0) ++first;
    if (first > m) {
        out.emplace_back(p);
        return;
    }
    // Pair `first` with an odd-offset j; stop at the first matched point,
    // since jumping over it would create a crossing.
    for (int j = first + 1; j <= m && p[j] == 0; ++j) {
        if ((j - first) % 2 == 0) continue;
        p[first] = j;
        p[j] = first;
        enumerate_matchings_rec(p, first + 1, out);
        p[first] = p[j] = 0;
    }
}

}  // namespace detail

// All noncrossing perfect matchings of 2N points, in lexicographic order
// of the partner array; |result| = Catalan(N).
inline std::vector<Coupling> enumerate_couplings(int n) {
    if (n < 0) throw std::invalid_argument("negative coupling size");
    std::vector<int> p(2 * n + 1, 0);
    std::vector<Coupling> out;
    detail::enumerate_matchings_rec(p, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Temperley-Lieb generator e_i, cyclic over 1..2N (successor of 2N is 1).
inline Coupling tl_apply(int i, const Coupling& pi) {
    const int m = pi.points();
    if (i < 1 || i > m) throw std::out_of_range("TL generator index");
    const int s = i % m + 1;
    if (pi.partner(i) == s) return pi;
    std::vector<int> p = pi.partner_array();
    const int j = p[i], k = p[s];
    p[i] = s;
    p[s] = i;
    p[j] = k;
    p[k] = j;
    return Coupling(std::move(p));
}

}  // namespace fpl
