#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fpl/markov.hpp>

using namespace fpl;

TEST_CASE("transition matrices are row-stochastic with exact entries") {
    for (int n = 2; n <= 4; ++n) {
        auto spec = plain_chain(n);
        auto p = transition_matrix(spec);
        for (const auto& row : p) {
            Rational sum = 0;
            for (const auto& v : row) {
                CHECK(v >= 0);
                sum += v;
            }
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("a generator leaving the state space is an error naming it") {
    ChainSpec bad;
    bad.labels = {"a", "b"};
    bad.generator_count = 1;
    bad.step = [](int, int) { return 7; };
    CHECK_THROWS_WITH_AS(transition_matrix(bad),
                         doctest::Contains("generator"), std::logic_error);
}

TEST_CASE("a reducible chain is rejected naming a non-communicating pair") {
    // Two absorbing states: no pair communicates.
    RationalMatrixM p = {{1, 0}, {0, 1}};
    std::vector<std::string> labels = {"left", "right"};
    CHECK_THROWS_AS(stationary(p, &labels), std::logic_error);
    try {
        stationary(p, &labels);
    } catch (const std::logic_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("left") != std::string::npos);
        CHECK(msg.find("right") != std::string::npos);
    }
}

TEST_CASE("a non-stochastic matrix is rejected") {
    RationalMatrixM p = {{Rational(1, 2), Rational(1, 3)}, {0, 1}};
    CHECK_THROWS_AS(stationary(p, nullptr), std::logic_error);
}

TEST_CASE("stationary solutions carry an exact zero-residual certificate") {
    for (int n = 2; n <= 4; ++n) {
        auto spec = plain_chain(n);
        auto mu = stationary(transition_matrix(spec), &spec.labels);
        CHECK(mu.residual_zero);
        Rational sum = 0;
        for (const auto& v : mu.distribution) sum += v;
        CHECK(sum == 1);
    }
}

TEST_CASE("stationary distribution equals normalized loop tallies") {
    for (int n = 1; n <= 4; ++n) {
        auto rep = verify_rs(n);
        CHECK(rep.pass);
        for (const auto& st : rep.states) CHECK(st.equal);
    }
}

TEST_CASE("half-turn chain stationary distribution matches symmetric tallies") {
    for (int n = 3; n <= 5; ++n) {
        auto rep = verify_dg(n);
        CHECK(rep.pass);
    }
}

TEST_CASE("cross-multiplied refined identity with integer count ratio") {
    for (int n = 1; n <= 2; ++n) {
        auto rep = verify_refined(n);
        CHECK(rep.pass);
        bool has_ratio = false;
        for (const auto& note : rep.notes)
            if (note.find("A_HT(2n)/A(n)") != std::string::npos) has_ratio = true;
        CHECK(has_ratio);
    }
}

TEST_CASE("reports serialize to the documented json schema") {
    auto rep = verify_rs(2);
    auto j = rep.to_json();
    CHECK(j.at("identity") == "razumov-stroganov");
    CHECK(j.at("pass") == true);
    CHECK(j.at("states").size() == 2);
    for (const auto& st : j.at("states")) {
        CHECK(st.contains("coupling"));
        CHECK(st.contains("lhs"));
        CHECK(st.contains("rhs"));
        CHECK(st.contains("equal"));
    }
}
