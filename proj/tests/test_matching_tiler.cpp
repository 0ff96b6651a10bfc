#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fpl/hexagon.hpp>
#include <fpl/matching.hpp>
#include <fpl/region.hpp>
#include <fstream>
#include <sstream>

using namespace fpl;

#ifndef FPL_DATA_DIR
#define FPL_DATA_DIR "data"
#endif
static const std::string kData = std::string(FPL_DATA_DIR) + "/golden/";

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST_CASE("matching counter agrees with explicit enumeration") {
    for (int a = 1; a <= 2; ++a) {
        auto region = hexagon_region(a);
        long listed = 0;
        enumerate_matchings(region, [&](const std::vector<int>&) { ++listed; });
        CHECK(BigInt(listed) == matching_count_integer(region));
    }
}

TEST_CASE("hexagon tiling counts at small side") {
    // MacMahon box counts: side 1 -> 2, side 2 -> 20.
    CHECK(matching_count_integer(hexagon_region(1)) == BigInt(2));
    CHECK(matching_count_integer(hexagon_region(2)) == BigInt(20));
}

TEST_CASE("an odd-cycle region is not bipartite") {
    PlanarRegion tri;
    int a = tri.add_vertex("a"), b = tri.add_vertex("b"), c = tri.add_vertex("c");
    tri.add_edge(a, b);
    tri.add_edge(b, c);
    tri.add_edge(c, a);
    CHECK_THROWS_AS(tri.bipartition(), std::logic_error);
}

TEST_CASE("weighted counts multiply edge weights per matching") {
    // Two vertices, two parallel edges with weights 1 and 1/2: total 3/2.
    PlanarRegion r;
    int u = r.add_vertex("u"), v = r.add_vertex("v");
    r.add_edge(u, v);
    r.add_edge(u, v, Rational(1, 2), "x");
    CHECK(count_matchings(r) == Rational(3, 2));
}

TEST_CASE("an odd-vertex region has no perfect matching") {
    PlanarRegion r;
    int u = r.add_vertex("u"), v = r.add_vertex("v"), w = r.add_vertex("w");
    r.add_edge(u, v);
    r.add_edge(v, w);
    CHECK(count_matchings(r) == Rational(0));
}

TEST_CASE("rotation-invariant tilings counted two ways") {
    const long expect[] = {0, 2, 5, 20};
    for (int a = 1; a <= 3; ++a) CHECK(rotation_invariant_tilings(a) == BigInt(expect[a]));
}

TEST_CASE("third-turn quotient shape") {
    for (int a = 1; a <= 4; ++a) {
        auto q = hexagon_quotient(a);
        CHECK(q.vertex_count() == 2 * a * a);
        CHECK(static_cast<int>(q.edges().size()) * 3 ==
              static_cast<int>(hexagon_region(a).edges().size()));
    }
}

TEST_CASE("glued region matchings") {
    CHECK(matching_count_integer(region_g(2)) == BigInt(6));
    CHECK(matching_count_integer(region_g(3)) == BigInt(30));
    CHECK(matching_count_integer(region_g(4)) == BigInt(250));
}

TEST_CASE("glued region structure matches its fixture") {
    CHECK(region_g(4).str() == slurp(kData + "glued_region_4.txt"));
}

TEST_CASE("weighted half regions match their fixtures") {
    Rational h(1, 2);
    CHECK(region_r(1, h, 1).str() == slurp(kData + "half_region_1.txt"));
    CHECK(region_rprime(1, h, 1).str() == slurp(kData + "half_region_prime_1.txt"));
    CHECK(region_r(2, h, 1).str() == slurp(kData + "half_region_2.txt"));
    CHECK(region_rprime(2, h, 1).str() == slurp(kData + "half_region_prime_2.txt"));
}

TEST_CASE("weight tags sit on the boundary rows they encode") {
    auto r = region_Rl(2, 1, Rational(1, 2), Rational(1, 3));
    int x_edges = 0, y_edges = 0;
    for (const auto& e : r.edges()) {
        if (e.tag == "x") {
            ++x_edges;
            CHECK(e.weight == Rational(1, 2));
        } else if (e.tag == "y") {
            ++y_edges;
            CHECK(e.weight == Rational(1, 3));
        } else {
            CHECK(e.weight == Rational(1));
        }
    }
    CHECK(x_edges == 2);  // n tagged vertical crossings
    CHECK(y_edges == 2);  // n tagged slant crossings
}

TEST_CASE("empty half region counts one") {
    // R'_0 is empty: its matching count is the empty product.
    CHECK(count_matchings(region_rprime(0, Rational(1, 2), 1)) == Rational(1));
}
