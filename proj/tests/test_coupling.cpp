#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fpl/coupling.hpp>
#include <fpl/rational.hpp>
#include <fpl/ht_coupling.hpp>
#include <set>

using namespace fpl;

TEST_CASE("coupling enumeration counts are the Catalan numbers") {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 1; n <= 8; ++n) {
        auto all = enumerate_couplings(n);
        CHECK(BigInt(static_cast<long>(all.size())) == binomial(2 * n, n) / BigInt(n + 1));
        CHECK(static_cast<long>(all.size()) == catalan[n]);
        std::set<Coupling> dedup(all.begin(), all.end());
        CHECK(dedup.size() == all.size());
    }
}

TEST_CASE("couplings are noncrossing involutions with canonical text form") {
    for (const auto& c : enumerate_couplings(4)) {
        for (int i = 1; i <= 8; ++i) {
            CHECK(c.partner(i) != i);
            CHECK(c.partner(c.partner(i)) == i);
        }
    }
    CHECK(pi0(3).str() == "(1,6)(2,5)(3,4)");
    CHECK(Coupling::from_pairs(2, {{1, 4}, {2, 3}}).str() == "(1,4)(2,3)");
}

TEST_CASE("rotation is a bijection of period 2n on couplings") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& c : enumerate_couplings(n)) {
            Coupling r = c;
            for (int k = 0; k < 2 * n; ++k) r = r.rotated(1);
            CHECK(r == c);
        }
    }
}

TEST_CASE("temperley-lieb operators are idempotent rewirings") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& c : enumerate_couplings(n)) {
            for (int i = 1; i <= 2 * n; ++i) {
                Coupling once = tl_apply(i, c);
                CHECK(once.partner(i) == (i % (2 * n)) + 1);
                CHECK(tl_apply(i, once) == once);
            }
        }
    }
}

TEST_CASE("half-turn couplings are exactly the rotation-symmetric ones") {
    for (int half = 1; half <= 5; ++half) {
        auto all = enumerate_ht_couplings(half);
        long brute = 0;
        for (const auto& c : enumerate_couplings(half)) {
            const int m = 2 * half;
            bool sym = true;
            for (int i = 1; i <= m && sym; ++i)
                sym = c.partner((i - 1 + half) % m + 1) == (c.partner(i) - 1 + half) % m + 1;
            if (sym) ++brute;
        }
        CHECK(static_cast<long>(all.size()) == brute);
        std::set<std::string> dedup;
        for (const auto& hc : all) dedup.insert(hc.str());
        CHECK(dedup.size() == all.size());
        for (const auto& hc : all)
            CHECK(hc.kind() ==
                  (half % 2 == 0 ? HtCoupling::Kind::Punctured : HtCoupling::Kind::Slit));
    }
}

TEST_CASE("projection from punctured quotients is onto with nonempty fibers") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& pi : enumerate_couplings(n)) {
            auto fiber = punctured_fiber(pi);
            CHECK(!fiber.empty());
            for (const auto& q : fiber) CHECK(project_punctured(q.underlying()) == pi);
        }
    }
}

TEST_CASE("symmetric temperley-lieb action commutes with the projection") {
    const int n = 3;
    for (const auto& hc : enumerate_ht_couplings(2 * n)) {
        for (int i = 1; i <= 2 * n; ++i) {
            Coupling lhs = project_punctured(tl_sym_apply(i, hc));
            Coupling rhs = tl_apply(i, project_punctured(hc));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("the nested rare family in the punctured quotient") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            auto p = pi_prime(k, n);
            CHECK(p.size() == 2 * n);
            CHECK(project_punctured(p.underlying()).size() == n);
        }
}

TEST_CASE("slit couplings round-trip through unslitting") {
    for (const auto& hc : enumerate_ht_couplings(3)) {
        SlitCoupling s(slit(hc));
        CHECK(slit(unslit(s)) == s);
        CHECK(unslit(s) == hc);
    }
    auto fam = slit_rare_family(3);
    std::set<std::string> dedup;
    for (const auto& s : fam) dedup.insert(s.str());
    CHECK(dedup.size() == fam.size());
}
