// Acceptance gate: one line per criterion, "criterion N: PASS|FAIL - summary".
// Exits nonzero iff any criterion fails.

#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <fpl/bijection.hpp>
#include <fpl/formulas.hpp>
#include <fpl/golden.hpp>
#include <fpl/markov.hpp>
#include <fpl/reconcile.hpp>

using namespace fpl;

static int failures = 0;

static void report(int criterion, bool pass, const std::string& summary) {
    std::printf("criterion %2d: %s - %s\n", criterion, pass ? "PASS" : "FAIL",
                summary.c_str());
    if (!pass) ++failures;
}

int main() {
    // 1. Coupling enumeration counts are the Catalan numbers, N = 1..8.
    {
        bool ok = true;
        for (int n = 1; n <= 8 && ok; ++n)
            ok = BigInt(static_cast<long>(enumerate_couplings(n).size())) ==
                 binomial(2 * n, n) / BigInt(n + 1);
        report(1, ok, "coupling enumeration matches Catalan numbers up to size 8");
    }

    // 2. Brute-force totals equal the product formula, N = 1..6.
    {
        bool ok = true;
        BigInt six = 0;
        for (int n = 1; n <= 6 && ok; ++n) {
            BigInt total = 0;
            enumerate_fpls(n, [&](const FplGrid&) { total += 1; });
            if (n == 6) six = total;
            ok = total == asm_count(n);
        }
        ok = ok && six == BigInt(7436);
        report(2, ok, "enumeration totals equal the product formula up to size 6");
    }

    // 3. Stationary distribution equals normalized tallies, N = 1..5.
    {
        bool ok = true;
        for (int n = 1; n <= 5 && ok; ++n) ok = verify_rs(n).pass;
        report(3, ok, "loop-model stationary vector matches tallies up to size 5");
    }

    // 4. Half-turn chain reports, N = 3..6 (informational identity; the
    //    report is required, expected to pass at these sizes).
    {
        bool ok = true;
        for (int n = 3; n <= 6 && ok; ++n) ok = verify_dg(n).pass;
        report(4, ok, "half-turn chain stationary vector matches symmetric tallies 3..6");
    }

    // 5. Cross-multiplied refined identity with integer count ratio, n = 1..3.
    {
        bool ok = true;
        for (int n = 1; n <= 3 && ok; ++n) ok = verify_refined(n).pass;
        report(5, ok, "refined projection identity exact with integer ratio, n <= 3");
    }

    // 6. Constructive bijection with invariant tilings, n = 1..3, anchors.
    {
        bool ok = true;
        for (int n = 1; n <= 3 && ok; ++n) {
            auto r = cspp_bijection(n);
            ok = r.verified &&
                 BigInt(static_cast<long>(r.pairs.size())) ==
                     rotation_invariant_tilings(r.hexagon_side);
        }
        ok = ok && rotation_invariant_tilings(1) == BigInt(2) &&
             rotation_invariant_tilings(2) == BigInt(5);
        report(6, ok, "explicit bijection onto rotation-invariant tilings, n <= 3");
    }

    // 7. Factorization of the symmetric count at sizes 5 and 7.
    {
        bool ok = ciucu_factorize_check(5).pass && ciucu_factorize_check(7).pass &&
                  count_matchings(region_rprime(0, Rational(1, 2), 1)) == Rational(1);
        report(7, ok, "three-way factorization agreement at sizes 5 and 7");
    }

    // 8. Determinant engine against cofactor expansion plus entry anchors.
    {
        bool ok = true;
        std::mt19937 rng(987654321);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            RationalMatrix m(5, std::vector<Rational>(5));
            for (auto& row : m)
                for (auto& v : row) v = Rational(num(rng), den(rng));
            ok = det_rational(m) == det_cofactor<Rational>(m, Rational(0), Rational(1));
        }
        Poly2 m110 = entry_m_poly(1, 1, 0);
        ok = ok && m110.str() == (Poly2::monomial(0, 0) + Poly2::monomial(1, 1)).str();
        ok = ok && entry_m_poly(1, 2, 1).str() == Poly2::monomial(0, 1).str();
        report(8, ok, "fraction-free determinant vs cofactor, entry anchors hold");
    }

    // 9. Determinant-tiling reconciliation with a fitted 2^(c*n+d) factor.
    {
        bool ok = true;
        std::vector<std::pair<Rational, Rational>> weights = {
            {Rational(1, 2), 1}, {1, 1}, {1, Rational(1, 2)},
            {Rational(1, 2), Rational(1, 2)}};
        for (int l = 0; l <= 2 && ok; ++l)
            for (const auto& [x, y] : weights) {
                auto fit = fit_power_factor(l, x, y, 3);
                ok = fit.fitted && fit.verified;
                if (!ok) break;
            }
        report(9, ok, "determinant matches weighted tilings up to a fitted 2-power");
    }

    // 10. Proposition reports, every side oracle-backed where oracles fit;
    //     the size-1 anchor reconciles after the fitted factor; product
    //     discrepancies reported with exact factors.
    {
        bool ok = true;
        auto eq1 = proposition_check("eq1", 3);
        ok = eq1.pass && eq1.states.at(0).equal && eq1.states.at(0).lhs == Rational(3, 2) &&
             eq1.states.at(0).rhs == Rational(3);
        for (const char* which : {"eq2", "eq3", "eq4", "eq5", "remark"}) {
            auto rep = proposition_check(which, 2);
            ok = ok && rep.pass && !rep.states.empty();
        }
        auto av = a_v(5);
        ok = ok && av.status == FormulaStatus::Mismatch && av.factor.has_value();
        auto pc = p_cstc(4);
        ok = ok && pc.oracle.has_value() && pc.factor.has_value();
        report(10, ok, "proposition reports emitted; anchor reconciles; factors exact");
    }

    // 11. Pure-algebra product identities, n <= 5.
    {
        bool ok = true;
        for (int n = 1; n <= 5 && ok; ++n)
            ok = p_cssc(2 * n).status == FormulaStatus::Match &&
                 p_qcssc(2 * n + 1).status == FormulaStatus::Match;
        report(11, ok, "self-complementary product identities exact, n <= 5");
    }

    // 12. Worker counts leave the serialized tally byte-identical.
    {
        auto render = [](const std::map<Coupling, BigInt>& tally) {
            std::ostringstream out;
            for (const auto& [c, v] : tally) out << c.str() << " " << v << "\n";
            return out.str();
        };
        std::string base = render(count_by_coupling(4, 1, nullptr));
        bool ok = true;
        for (int w : {2, 3, 4, 8}) ok = ok && render(count_by_coupling(4, w, nullptr)) == base;
        report(12, ok, "reports byte-identical across worker counts");
    }

    return failures == 0 ? 0 : 1;
}
