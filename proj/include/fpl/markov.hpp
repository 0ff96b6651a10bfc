#pragma once

// Temperley-Lieb Markov chains on couplings (plain, punctured, slit),
// exact stationary distributions, and the verification of the stationary
// identities against brute-force FPL tallies.

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpl/coupling.hpp"
#include "fpl/fpl_grid.hpp"
#include "fpl/ht_coupling.hpp"
#include "fpl/rational.hpp"
#include "fpl/report.hpp"

namespace fpl {

// A finite chain: `step(g, s)` applies generator g (0-based) to state s;
// one uniform generator choice per step. States carry printable labels.
struct ChainSpec {
    std::vector<std::string> labels;
    int generator_count = 0;
    std::function<int(int, int)> step;  // (generator, state index) -> state index
};

using RationalMatrixM = std::vector<std::vector<Rational>>;

inline RationalMatrixM transition_matrix(const ChainSpec& spec) {
    const int n = static_cast<int>(spec.labels.size());
    RationalMatrixM p(n, std::vector<Rational>(n, 0));
    const Rational w = Rational(1) / spec.generator_count;
    for (int s = 0; s < n; ++s)
        for (int g = 0; g < spec.generator_count; ++g) {
            int t = spec.step(g, s);
            if (t < 0 || t >= n) {
                std::ostringstream os;
                os << "generator " << g + 1 << " leaves the state space from " << spec.labels[s];
                throw std::logic_error(os.str());
            }
            p[s][t] += w;
        }
    return p;
}

struct StationaryResult {
    std::vector<Rational> distribution;
    bool residual_zero = false;  // exact muP = mu certificate
};

namespace detail {

// Strong connectivity; on failure returns a pair (s, t) with t unreachable
// from s.
inline std::optional<std::pair<int, int>> non_communicating_pair(const RationalMatrixM& p) {
    const int n = static_cast<int>(p.size());
    auto reach = [&](int s, bool forward) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                bool edge = forward ? p[v][w] != 0 : p[w][v] != 0;
                if (edge && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    };
    auto fwd = reach(0, true), bwd = reach(0, false);
    for (int v = 0; v < n; ++v) {
        if (!fwd[v]) return std::pair{0, v};
        if (!bwd[v]) return std::pair{v, 0};
    }
    return std::nullopt;
}

}  // namespace detail

// Exact stationary vector of an irreducible row-stochastic matrix: solve
// mu(P - I) = 0 with the normalization sum(mu) = 1 by rational elimination.
inline StationaryResult stationary(const RationalMatrixM& p,
                                   const std::vector<std::string>* labels = nullptr) {
    const int n = static_cast<int>(p.size());
    for (int s = 0; s < n; ++s) {
        Rational row = 0;
        for (int t = 0; t < n; ++t) row += p[s][t];
        if (row != 1) throw std::invalid_argument("matrix is not row-stochastic");
    }
    if (auto bad = detail::non_communicating_pair(p)) {
        std::ostringstream os;
        os << "chain is reducible: no path between states ";
        if (labels)
            os << (*labels)[bad->first] << " and " << (*labels)[bad->second];
        else
            os << bad->first << " and " << bad->second;
        throw std::invalid_argument(os.str());
    }
    // Unknown mu (row vector): equations sum_s mu_s (P[s][t] - I[s][t]) = 0
    // for t < n-1, plus sum_s mu_s = 1.
    RationalMatrixM aug(n, std::vector<Rational>(n + 1, 0));
    for (int t = 0; t + 1 < n; ++t)
        for (int s = 0; s < n; ++s) aug[t][s] = p[s][t] - Rational(t == s ? 1 : 0);
    for (int s = 0; s < n; ++s) aug[n - 1][s] = 1;
    aug[n - 1][n] = 1;
    // Gaussian elimination with partial (first nonzero) pivoting.
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == -1) throw std::logic_error("singular stationary system");
        std::swap(aug[col], aug[piv]);
        Rational inv = Rational(1) / aug[col][col];
        for (int c = col; c <= n; ++c) aug[col][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    StationaryResult res;
    res.distribution.resize(n);
    for (int s = 0; s < n; ++s) res.distribution[s] = aug[s][n];
    // Certificate: exact muP = mu, nonnegativity, total 1.
    res.residual_zero = true;
    Rational total = 0;
    for (int t = 0; t < n; ++t) {
        Rational acc = 0;
        for (int s = 0; s < n; ++s) acc += res.distribution[s] * p[s][t];
        if (acc != res.distribution[t] || res.distribution[t] < 0) res.residual_zero = false;
        total += res.distribution[t];
    }
    if (total != 1) res.residual_zero = false;
    return res;
}

// ---------------------------------------------------------------------------
// Concrete chains.

inline ChainSpec plain_chain(int n) {
    auto states = enumerate_couplings(n);
    std::map<Coupling, int> index;
    ChainSpec spec;
    for (const auto& c : states) {
        index[c] = static_cast<int>(spec.labels.size());
        spec.labels.push_back(c.str());
    }
    spec.generator_count = 2 * n;
    spec.step = [states, index](int g, int s) {
        return index.at(tl_apply(g + 1, states[s]));
    };
    return spec;
}

// HT chain for grid size N: states are all HT-symmetric couplings on 2N
// points (slit-representable when N is odd, punctured when N is even);
// generators are the N symmetrized operators.
inline ChainSpec ht_chain(int n) {
    auto states = enumerate_ht_couplings(n);
    std::map<HtCoupling, int> index;
    ChainSpec spec;
    for (const auto& c : states) {
        index[c] = static_cast<int>(spec.labels.size());
        // Odd sizes display in the compact slit form, even sizes as the
        // full punctured matching.
        spec.labels.push_back(n % 2 == 1 ? slit(c).str() : c.str());
    }
    spec.generator_count = n;
    spec.step = [states, index](int g, int s) {
        return index.at(tl_sym_apply(g + 1, states[s]));
    };
    return spec;
}

// ---------------------------------------------------------------------------
// Verifications.

inline ReconciliationReport verify_rs(int n) {
    ReconciliationReport rep;
    rep.identity = "razumov-stroganov";
    rep.size = n;
    auto states = enumerate_couplings(n);
    auto spec = plain_chain(n);
    auto mu = stationary(transition_matrix(spec), &spec.labels);
    auto tally = count_by_coupling(n);
    BigInt total = 0;
    for (const auto& [pi, c] : tally) total += c;
    rep.pass = mu.residual_zero;
    if (!mu.residual_zero) rep.notes.push_back("stationary certificate failed");
    for (std::size_t i = 0; i < states.size(); ++i) {
        ReconState st;
        st.coupling = states[i].str();
        st.lhs = mu.distribution[i];
        auto it = tally.find(states[i]);
        BigInt cnt = it == tally.end() ? BigInt(0) : it->second;
        st.rhs = Rational(cnt) / Rational(total);
        st.equal = st.lhs == st.rhs;
        if (!st.equal) rep.pass = false;
        rep.states.push_back(st);
    }
    return rep;
}

inline ReconciliationReport verify_dg(int n) {
    ReconciliationReport rep;
    rep.identity = "de-gier";
    rep.size = n;
    auto states = enumerate_ht_couplings(n);
    auto spec = ht_chain(n);
    auto mu = stationary(transition_matrix(spec), &spec.labels);
    auto tally = count_ht_by_coupling(n);
    BigInt total = 0;
    for (const auto& [pi, c] : tally) total += c;
    rep.pass = mu.residual_zero;
    if (!mu.residual_zero) rep.notes.push_back("stationary certificate failed");
    for (std::size_t i = 0; i < states.size(); ++i) {
        ReconState st;
        st.coupling = spec.labels[i];
        st.lhs = mu.distribution[i];
        auto it = tally.find(states[i]);
        BigInt cnt = it == tally.end() ? BigInt(0) : it->second;
        st.rhs = Rational(cnt) / Rational(total);
        st.equal = st.lhs == st.rhs;
        if (!st.equal) rep.pass = false;
        rep.states.push_back(st);
    }
    return rep;
}

// Cross-multiplied refined identity at half-size n:
//   A(n; pi) * A_HT(2n) = A(n) * sum over punctured pi' with p(pi') = pi of
//   A_HT(2n; pi'), for every plain coupling pi of size n. Also reports the
//   ratio A_HT(2n)/A(n).
inline ReconciliationReport verify_refined(int n) {
    ReconciliationReport rep;
    rep.identity = "refined-projection";
    rep.size = n;
    auto plain_tally = count_by_coupling(n);
    auto ht_tally = count_ht_by_coupling(2 * n);
    BigInt a_n = 0, a_ht = 0;
    for (const auto& [pi, c] : plain_tally) a_n += c;
    for (const auto& [pi, c] : ht_tally) a_ht += c;
    rep.pass = true;
    for (const auto& pi : enumerate_couplings(n)) {
        BigInt lhs_count = 0;
        if (auto it = plain_tally.find(pi); it != plain_tally.end()) lhs_count = it->second;
        BigInt fiber_sum = 0;
        for (const auto& [hc, c] : ht_tally)
            if (project_punctured(hc) == pi) fiber_sum += c;
        ReconState st;
        st.coupling = pi.str();
        st.lhs = Rational(lhs_count) * Rational(a_ht);
        st.rhs = Rational(a_n) * Rational(fiber_sum);
        st.equal = st.lhs == st.rhs;
        if (!st.equal) rep.pass = false;
        rep.states.push_back(st);
    }
    Rational ratio = Rational(a_ht) / Rational(a_n);
    rep.notes.push_back("A_HT(2n)/A(n) = " + to_string(ratio));
    if (boost::multiprecision::denominator(ratio) != 1) {
        rep.pass = false;
        rep.notes.push_back("ratio is not an integer");
    }
    return rep;
}

}  // namespace fpl
