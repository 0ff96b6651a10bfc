#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fpl/bijection.hpp>
#include <fpl/formulas.hpp>
#include <fpl/fpl_grid.hpp>
#include <fpl/golden.hpp>
#include <set>

using namespace fpl;

#ifndef FPL_DATA_DIR
#define FPL_DATA_DIR "data"
#endif
static const std::string kData = std::string(FPL_DATA_DIR) + "/golden/";

TEST_CASE("total enumeration matches the alternating sign matrix product") {
    // A(n) = prod (3j+1)!/(n+j)!; frozen small values guard the product too.
    const long frozen[] = {0, 1, 2, 7, 42, 429};
    for (int n = 1; n <= 5; ++n) {
        BigInt total = 0;
        enumerate_fpls(n, [&](const FplGrid&) { total += 1; });
        CHECK(total == asm_count(n));
        CHECK(total == BigInt(frozen[n]));
    }
}

TEST_CASE("size-3 tallies by coupling") {
    auto tally = count_by_coupling(3);
    REQUIRE(tally.size() == 5);
    std::map<std::string, long> expect = {{"(1,2)(3,4)(5,6)", 2},
                                          {"(1,2)(3,6)(4,5)", 1},
                                          {"(1,4)(2,3)(5,6)", 1},
                                          {"(1,6)(2,3)(4,5)", 2},
                                          {"(1,6)(2,5)(3,4)", 1}};
    for (const auto& [c, v] : tally) CHECK(v == BigInt(expect.at(c.str())));
}

TEST_CASE("worker-partitioned tallies are identical to the serial ones") {
    for (int n : {3, 4}) {
        auto serial = count_by_coupling(n);
        for (int w : {1, 2, 3, 5, 8}) CHECK(count_by_coupling(n, w, nullptr) == serial);
    }
}

TEST_CASE("half-turn symmetric counts") {
    const long frozen[] = {0, 1, 2, 3, 10, 25, 140, 588};
    for (int size = 1; size <= 6; ++size) {
        BigInt total = 0;
        enumerate_fpls(size, [&](const FplGrid& f) {
            CHECK(is_half_turn_symmetric(f));
            total += 1;
        }, nullptr, GridSymmetry::HalfTurn);
        CHECK(total == BigInt(frozen[size]));
    }
}

TEST_CASE("grid transforms are involutions preserving validity") {
    // The half-turn respects the boundary at every size; the left-right
    // mirror respects it only at odd sizes (stub parities swap otherwise).
    enumerate_fpls(4, [&](const FplGrid& f) {
        FplGrid r = transform_grid(f, [&](const GridEdge& e) { return rotate180(e, 4); });
        CHECK(r.valid());
        CHECK(transform_grid(r, [&](const GridEdge& e) { return rotate180(e, 4); }) == f);
    });
    enumerate_fpls(3, [&](const FplGrid& f) {
        FplGrid m = transform_grid(f, [&](const GridEdge& e) { return mirror_lr(e, 3); });
        CHECK(m.valid());
        CHECK(transform_grid(m, [&](const GridEdge& e) { return mirror_lr(e, 3); }) == f);
    });
}

TEST_CASE("boundary stubs alternate and label counterclockwise") {
    const int n = 4;
    std::set<int> labels;
    for (int r = 0; r < n; ++r)
        for (const GridEdge& e : {h_edge(-1, r), h_edge(n - 1, r)})
            if (stub_occupied(e, n)) labels.insert(stub_label(e, n));
    for (int c = 0; c < n; ++c)
        for (const GridEdge& e : {v_edge(c, -1), v_edge(c, n - 1)})
            if (stub_occupied(e, n)) labels.insert(stub_label(e, n));
    CHECK(labels == std::set<int>({1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(stub_label(h_edge(-1, n - 1), n) == 1);  // top-left west stub
}

TEST_CASE("worked size-8 example reproduces its coupling") {
    auto edges = read_edge_list(kData + "fpl_size8_example.txt");
    auto g = grid_from_edges(8, edges);
    REQUIRE(g.valid());
    std::ifstream in(kData + "fpl_size8_example_coupling.txt");
    std::string expect;
    REQUIRE(std::getline(in, expect));
    CHECK(coupling_of(g).str() == expect);
}

TEST_CASE("even fixed-edge family matches the size-12 fixture") {
    auto ec = fixed_edges_even(6);
    CHECK(edge_list_string(ec.present()) ==
          edge_list_string(read_edge_list(kData + "fixed_edges_even_size12.txt")));
}

TEST_CASE("odd fixed-edge family matches the size-13 fixture") {
    auto ec = fixed_edges_odd(6);
    CHECK(edge_list_string(ec.present()) ==
          edge_list_string(read_edge_list(kData + "fixed_edges_odd_size13.txt")));
}

TEST_CASE("every fpl under the even fixed edges has a nested-family coupling") {
    const int n = 2;
    EdgeConstraint ec = fixed_edges_even(n);
    std::set<std::string> seen;
    enumerate_fpls(2 * n, [&](const FplGrid& f) { seen.insert(coupling_of(f).str()); }, &ec);
    std::set<std::string> full;
    for (int k = 0; k <= n; ++k) full.insert(pi_prime(k, n).underlying().str());
    for (const auto& s : seen) CHECK(full.count(s) == 1);
}

TEST_CASE("constrained half-turn counts by parity") {
    // Even sizes 2n with the even family; odd sizes 2n+1 with the odd one.
    const long even_expect[] = {0, 2, 5, 20};
    const long odd_expect[] = {0, 2, 6, 30};
    for (int n = 1; n <= 3; ++n) {
        EdgeConstraint ee = fixed_edges_even(n);
        BigInt ce = 0;
        enumerate_fpls(2 * n, [&](const FplGrid&) { ce += 1; }, &ee, GridSymmetry::HalfTurn);
        CHECK(ce == BigInt(even_expect[n]));
        EdgeConstraint eo = fixed_edges_odd(n);
        BigInt co = 0;
        enumerate_fpls(2 * n + 1, [&](const FplGrid&) { co += 1; }, &eo,
                       GridSymmetry::HalfTurn);
        CHECK(co == BigInt(odd_expect[n]));
    }
}

TEST_CASE("non-fixed quotients have the expected shape and matchings") {
    // Even: 2n^2 vertices, isomorphic to the third-turn honeycomb quotient.
    for (int n = 1; n <= 4; ++n) {
        auto q = nonfixed_quotient_graph(n, false);
        CHECK(q.vertex_count() == 2 * n * n);
        CHECK(find_isomorphism(q, hexagon_quotient(n)).has_value());
    }
    // Odd: 2n(n+1) vertices, isomorphic to the glued region.
    for (int n = 2; n <= 4; ++n) {
        auto q = nonfixed_quotient_graph(n, true);
        CHECK(q.vertex_count() == 2 * n * (n + 1));
        CHECK(find_isomorphism(q, region_g(n)).has_value());
    }
    // Matchings of the quotients equal the constrained symmetric counts.
    CHECK(matching_count_integer(nonfixed_quotient_graph(2, false)) == BigInt(5));
    CHECK(matching_count_integer(nonfixed_quotient_graph(2, true)) == BigInt(6));
    CHECK(matching_count_integer(nonfixed_quotient_graph(3, true)) == BigInt(30));
}

TEST_CASE("inconsistent constraints are reported, not silently dropped") {
    EdgeConstraint ec;
    ec.force_absent(h_edge(-1, 3));  // an occupied boundary stub for n = 4
    auto stats = enumerate_fpls(4, [](const FplGrid&) {});
    CHECK(!stats.inconsistent_constraint);
    auto bad = enumerate_fpls(4, [](const FplGrid&) {}, &ec);
    CHECK(bad.inconsistent_constraint);
    CHECK(bad.count == BigInt(0));
}
