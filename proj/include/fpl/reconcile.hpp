#pragma once

// Determinant vs weighted-tiling reconciliation for the staircase regions:
// the two values must agree up to a per-(row-count, weight-pattern) global
// normalization of the form 2^(c*n + d), fitted at n = 1, 2 and verified
// beyond.

#include <optional>
#include <sstream>
#include <string>

#include "fpl/determinant.hpp"
#include "fpl/hexagon.hpp"
#include "fpl/matching.hpp"
#include "fpl/report.hpp"

namespace fpl {

inline ReconciliationReport reconcile_r(int l, int n, const Rational& x, const Rational& y) {
    ReconciliationReport rep;
    std::ostringstream id;
    id << "reconcile-r l=" << l << " x=" << to_string(x) << " y=" << to_string(y);
    rep.identity = id.str();
    rep.size = n;
    Rational det_v = r_func(l, n, x, y);
    Rational tile_v = count_matchings(region_Rl(n, l, x, y));
    ReconState st;
    st.coupling = "determinant vs tiling oracle";
    st.lhs = det_v;
    st.rhs = tile_v;
    st.equal = det_v == tile_v;
    rep.states.push_back(st);
    rep.pass = st.equal;
    if (det_v != 0) rep.notes.push_back("ratio = " + to_string(tile_v / det_v));
    return rep;
}

struct PowerFit {
    long c = 0, d = 0;
    bool fitted = false;    // ratios at n = 1, 2 were exact powers of two
    bool verified = false;  // the fit extends to the verification size
};

// Fit oracle/determinant = 2^(c*n + d) from n = 1, 2 and verify at
// n = n_check.
inline PowerFit fit_power_factor(int l, const Rational& x, const Rational& y, int n_check = 3) {
    PowerFit fit;
    auto ratio = [&](int n) -> std::optional<long> {
        Rational det_v = r_func(l, n, x, y);
        if (det_v == 0) return std::nullopt;
        return log2_exact(count_matchings(region_Rl(n, l, x, y)) / det_v);
    };
    auto e1 = ratio(1), e2 = ratio(2);
    if (!e1 || !e2) return fit;
    fit.c = *e2 - *e1;
    fit.d = *e1 - fit.c;
    fit.fitted = true;
    auto ec = ratio(n_check);
    fit.verified = ec && *ec == fit.c * n_check + fit.d;
    return fit;
}

}  // namespace fpl
