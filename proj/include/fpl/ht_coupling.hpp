#pragma once

// Half-turn-symmetric couplings, their compact slit (odd) and punctured
// (even) representations, and the symmetrized Temperley-Lieb action.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpl/coupling.hpp"

namespace fpl {

// Noncrossing matching of 2L points invariant under i -> i+L; exactly one
// diameter pair {i, i+L} when L is odd, none when L is even.
class HtCoupling {
public:
    enum class Kind { Punctured, Slit };

    explicit HtCoupling(Coupling c) : c_(std::move(c)) {
        const int m = c_.points();
        if (m % 2 != 0) throw std::invalid_argument("HT coupling needs an even point count");
        const int half = m / 2;
        int diameters = 0;
        for (int i = 1; i <= m; ++i) {
            int j = c_.partner(i);
            if (c_.partner((i - 1 + half) % m + 1) != (j - 1 + half) % m + 1)
                throw std::invalid_argument("coupling is not half-turn symmetric");
            if ((j - 1 + half) % m + 1 == i) ++diameters;
        }
        diameters /= 2;  // each diameter pair counted from both endpoints
        if (half % 2 == 1 ? diameters != 1 : diameters != 0)
            throw std::invalid_argument("wrong number of diameter pairs for this parity");
    }

    int points() const { return c_.points(); }     // 2L
    int half() const { return c_.points() / 2; }   // L
    Kind kind() const { return half() % 2 == 0 ? Kind::Punctured : Kind::Slit; }
    const Coupling& as_coupling() const { return c_; }
    int partner(int i) const { return c_.partner(i); }

    bool operator==(const HtCoupling& o) const { return c_ == o.c_; }
    bool operator<(const HtCoupling& o) const { return c_ < o.c_; }

    std::string str() const { return c_.str(); }

    HtCoupling rotated(int r) const { return HtCoupling(c_.rotated(r)); }

private:
    Coupling c_;
};

// All HT-symmetric couplings on 2L points, canonically ordered.
inline std::vector<HtCoupling> enumerate_ht_couplings(int half) {
    std::vector<HtCoupling> out;
    for (const Coupling& c : enumerate_couplings(half)) {
        const int m = 2 * half;
        bool sym = true;
        for (int i = 1; i <= m && sym; ++i)
            sym = c.partner((i - 1 + half) % m + 1) == (c.partner(i) - 1 + half) % m + 1;
        if (sym) out.emplace_back(c);
    }
    return out;
}

// e'_i = e_i e_{i+L}, i in 1..L; the two factors commute on HT couplings.
inline HtCoupling tl_sym_apply(int i, const HtCoupling& pi) {
    const int half = pi.half();
    if (i < 1 || i > half) throw std::out_of_range("symmetrized TL index");
    return HtCoupling(tl_apply(i + half, tl_apply(i, pi.as_coupling())));
}

// Forget the puncture: quotient an even HT coupling on 2L points by i -> i+L,
// yielding the plane coupling of size L/2.
inline Coupling project_punctured(const HtCoupling& pi) {
    if (pi.kind() != HtCoupling::Kind::Punctured)
        throw std::invalid_argument("projection needs an even (punctured) HT coupling");
    const int half = pi.half();
    std::vector<int> p(half + 1, 0);
    for (int i = 1; i <= half; ++i) p[i] = (pi.partner(i) - 1) % half + 1;
    return Coupling(std::move(p));
}

// Even HT coupling with derived per-arc winding flags. Equality is by the
// full matching; the flags are cached data.
class PuncturedCoupling {
public:
    explicit PuncturedCoupling(HtCoupling hc) : hc_(std::move(hc)) {
        if (hc_.kind() != HtCoupling::Kind::Punctured)
            throw std::invalid_argument("punctured coupling needs even half-size");
        const int half = hc_.half();
        // An orbit winds iff one of its two chords crosses the seam between
        // points L and L+1 in the annulus drawing.
        for (int i = 1; i <= hc_.points(); ++i) {
            int j = hc_.partner(i);
            if (j < i) continue;
            int a = (i - 1) % half + 1, b = (j - 1) % half + 1;
            if (a > b) std::swap(a, b);
            if (i <= half && half < j) winding_.push_back({a, b});
        }
    }

    int size() const { return hc_.half(); }
    const HtCoupling& underlying() const { return hc_; }
    const std::vector<std::pair<int, int>>& winding_arcs() const { return winding_; }

    bool operator==(const PuncturedCoupling& o) const { return hc_ == o.hc_; }
    bool operator<(const PuncturedCoupling& o) const { return hc_ < o.hc_; }

    std::string str() const { return hc_.str(); }

private:
    HtCoupling hc_;
    std::vector<std::pair<int, int>> winding_;
};

// All punctured couplings projecting to pi (a plane coupling of size n).
inline std::vector<PuncturedCoupling> punctured_fiber(const Coupling& pi) {
    const int n = pi.size();
    std::vector<PuncturedCoupling> out;
    for (const HtCoupling& hc : enumerate_ht_couplings(2 * n))
        if (project_punctured(hc) == pi) out.emplace_back(hc);
    return out;
}

// pi'_{k,n} = {{i,4n+1-i}: i<=k} u {{i,2n+1-i}: k<i<=n}, closed under i -> i+2n.
inline PuncturedCoupling pi_prime(int k, int n) {
    if (k < 0 || k > n) throw std::out_of_range("pi'_{k,n} needs 0 <= k <= n");
    const int m = 4 * n;
    std::vector<int> p(m + 1, 0);
    auto add = [&](int a, int b) {
        a = (a - 1 + m) % m + 1;
        b = (b - 1 + m) % m + 1;
        p[a] = b;
        p[b] = a;
    };
    for (int i = 1; i <= k; ++i) {
        add(i, 4 * n + 1 - i);
        add(i + 2 * n, 2 * n + 1 - i);
    }
    for (int i = k + 1; i <= n; ++i) {
        add(i, 2 * n + 1 - i);
        add(i + 2 * n, 4 * n + 1 - i);
    }
    return PuncturedCoupling(HtCoupling(Coupling(std::move(p))));
}

// Odd HT coupling in compact form: one singleton (the diameter) plus a
// noncrossing matching of the remaining L-1 points on the slit disk.
class SlitCoupling {
public:
    SlitCoupling(int size, int singleton, std::vector<int> partner)
        : size_(size), singleton_(singleton), part_(std::move(partner)) {
        if (size_ < 1 || size_ % 2 == 0) throw std::invalid_argument("slit size must be odd");
        if (singleton_ < 1 || singleton_ > size_) throw std::out_of_range("singleton index");
        if (static_cast<int>(part_.size()) != size_ + 1 || part_[singleton_] != 0)
            throw std::invalid_argument("bad slit partner array");
        // Validity (involution, noncrossing on the slit disk) is certified by
        // the unslit round trip below.
        unslit_check();
    }

    int size() const { return size_; }
    int singleton() const { return singleton_; }
    int partner(int i) const { return part_[i]; }

    bool operator==(const SlitCoupling& o) const {
        return size_ == o.size_ && singleton_ == o.singleton_ && part_ == o.part_;
    }
    bool operator<(const SlitCoupling& o) const {
        return std::tie(singleton_, part_) < std::tie(o.singleton_, o.part_);
    }

    std::string str() const {
        std::string s;
        for (int i = 1; i <= size_; ++i)
            if (part_[i] > i)
                s += "(" + std::to_string(i) + "," + std::to_string(part_[i]) + ")";
        return s + "|s=" + std::to_string(singleton_);
    }

private:
    void unslit_check() const;

    int size_;
    int singleton_;
    std::vector<int> part_;  // part_[singleton] == 0
};

// Expand a slit coupling of odd size L to the full HT coupling on 2L points:
// the singleton becomes the diameter {s, s+L}; every arc {a, b} lifts to the
// unique symmetric pair of chords avoiding the diameter.
inline HtCoupling unslit(const SlitCoupling& sc) {
    const int half = sc.size();
    const int m = 2 * half;
    const int s = sc.singleton();
    std::vector<int> p(m + 1, 0);
    p[s] = s + half;
    p[s + half] = s;
    // Representative of class a inside the open window (s, s+L).
    auto rep = [&](int a) { return a > s ? a : a + half; };
    for (int a = 1; a <= half; ++a) {
        int b = sc.partner(a);
        if (b < a) continue;
        int i = rep(a), j = rep(b);
        p[i] = j;
        p[j] = i;
        int i2 = (i - 1 + half) % m + 1, j2 = (j - 1 + half) % m + 1;
        p[i2] = j2;
        p[j2] = i2;
    }
    return HtCoupling(Coupling(std::move(p)));
}

// Compress an odd HT coupling to its slit form; rejects even half-size.
inline SlitCoupling slit(const HtCoupling& hc) {
    if (hc.kind() != HtCoupling::Kind::Slit)
        throw std::invalid_argument("slit needs an odd (one-diameter) HT coupling");
    const int half = hc.half();
    const int m = 2 * half;
    int singleton = 0;
    std::vector<int> p(half + 1, 0);
    for (int i = 1; i <= m; ++i) {
        int j = hc.partner(i);
        if ((j - 1 + half) % m + 1 == i) {
            if (i <= half) singleton = i;
            continue;
        }
        if (j < i) continue;
        int a = (i - 1) % half + 1, b = (j - 1) % half + 1;
        p[a] = b;
        p[b] = a;
    }
    return SlitCoupling(half, singleton, std::move(p));
}

inline void SlitCoupling::unslit_check() const {
    (void)unslit(*this);  // throws if the lift is not a valid HT coupling
}

// The n+2 slit couplings of size 2n+1 with at most two short edges, member k
// having its singleton at position k (k = 0 meaning 2n+1), rotated by
// `offset` on the doubled circle.
inline std::vector<SlitCoupling> slit_rare_family(int n, int offset = 0) {
    if (n < 0) throw std::invalid_argument("negative family parameter");
    const int size = 2 * n + 1;
    std::vector<SlitCoupling> out;
    for (int k = 0; k <= n + 1; ++k) {
        std::vector<int> p(size + 1, 0);
        auto add = [&](int a, int b) {
            p[a] = b;
            p[b] = a;
        };
        int singleton;
        if (k == 0) {
            singleton = size;
            for (int i = 1; i <= n; ++i) add(i, 2 * n + 1 - i);
        } else {
            singleton = k;
            for (int i = 1; i < k; ++i) add(i, 2 * n + 2 - i);
            for (int i = k + 1; i <= n + 1; ++i) add(i, 2 * n + 3 - i);
        }
        SlitCoupling sc(size, singleton, std::move(p));
        out.push_back(offset == 0 ? sc : slit(unslit(sc).rotated(offset)));
    }
    return out;
}

}  // namespace fpl
