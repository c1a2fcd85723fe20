#include <doctest.h>

#include <vector>

#include "fairgame/errors.hpp"
#include "fairgame/oracle.hpp"
#include "support/fixtures.hpp"

using namespace fairgame;

TEST_CASE("strategy enumeration is lexicographic with ascending successors") {
    const GameGraph g = fixtures::g1();
    const auto min_strats = enumerate_strategies(g, VertexClass::Min);
    REQUIRE(min_strats.size() == 2);
    CHECK(min_strats[0].at(1) == 0);
    CHECK(min_strats[1].at(1) == 2);
    CHECK(min_strats[0].at(0) == DetMemorylessStrategy::kNone);
    CHECK(min_strats[0].at(2) == DetMemorylessStrategy::kNone);

    // v0 is the only Max vertex and has a single successor.
    const auto max_strats = enumerate_strategies(g, VertexClass::Max);
    REQUIRE(max_strats.size() == 1);
    CHECK(max_strats[0].at(0) == 1);
}

TEST_CASE("enumeration with no owned vertices yields one empty strategy") {
    const GameGraph g = fixtures::g2();
    const auto strats = enumerate_strategies(g, VertexClass::Min);
    REQUIRE(strats.size() == 1);
    for (int v = 0; v < g.size(); ++v) {
        CHECK(strats[0].at(v) == DetMemorylessStrategy::kNone);
    }
}

TEST_CASE("enumeration size guard trips on too many owned vertices") {
    // 13 Max vertices, each with two successors, one shared terminal.
    std::vector<VertexSpec> specs;
    const int owned = kOracleMaxOwnedPerPlayer + 1;
    for (int v = 0; v < owned; ++v) {
        specs.push_back({VertexClass::Max, 0.0, {{(v + 1) % owned, 1.0}, {owned, 1.0}}});
    }
    specs.push_back({VertexClass::Prob, 0.0, {{owned, 1.0}}});
    const GameGraph g = GameGraph::from_vertices(specs, 0);
    CHECK_THROWS_AS(enumerate_strategies(g, VertexClass::Max), SizeGuardError);
}

TEST_CASE("fairness of deterministic Min strategies") {
    const GameGraph g = fixtures::g1();
    DetMemorylessStrategy to_terminal{VertexClass::Min, {DetMemorylessStrategy::kNone, 2,
                                                         DetMemorylessStrategy::kNone}};
    DetMemorylessStrategy to_loop{VertexClass::Min, {DetMemorylessStrategy::kNone, 0,
                                                     DetMemorylessStrategy::kNone}};
    CHECK(is_fair_det_strategy(g, to_terminal));
    // Always returning to v0 keeps visiting v1 while starving t.
    CHECK_FALSE(is_fair_det_strategy(g, to_loop));
}

TEST_CASE("fairness on the release game") {
    const GameGraph g = fixtures::g6();
    const auto strats = enumerate_strategies(g, VertexClass::Min);
    REQUIRE(strats.size() == 2);
    // Choice v1 (id 1) loops v0 <-> v1 and starves w; choice w (id 2) is fair.
    CHECK_FALSE(is_fair_det_strategy(g, strats[0]));
    CHECK(is_fair_det_strategy(g, strats[1]));
}

TEST_CASE("reference values on the fixture games") {
    // g1: under the fair choice v1 -> t the chain is v0 -> v1 -> t and only
    // v0's reward 1 is collected; all arithmetic is exact.
    const ValueVector v1 = oracle_value(fixtures::g1());
    REQUIRE(v1.size() == 3);
    CHECK(v1[0] == 1.0);
    CHECK(v1[1] == 0.0);
    CHECK(v1[2] == 0.0);

    // g2: x = 1 + x/2 solved by elimination, exactly 2.
    const ValueVector v2 = oracle_value(fixtures::g2());
    CHECK(v2[0] == 2.0);
    CHECK(v2[1] == 0.0);

    // g4: max(1 + a/2 fixed at 2, reward 3 via v2) = 3; value at v1 under
    // the v2-bound maximizer is 1 + 3/2.
    const ValueVector v4 = oracle_value(fixtures::g4());
    CHECK(v4[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(v4[1] == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(v4[2] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(v4[3] == 0.0);

    // g5: Min picks the reward-2 branch at v0.
    const ValueVector v5 = oracle_value(fixtures::g5());
    CHECK(v5[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(v5[1] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(v5[2] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(v5[3] == 0.0);

    // g6: the only fair Min strategy releases through w, reward 7.
    const ValueVector v6 = oracle_value(fixtures::g6());
    CHECK(v6[0] == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(v6[1] == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(v6[2] == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(v6[3] == 0.0);
}

TEST_CASE("oracle value refuses a non-stopping game") {
    CHECK_THROWS_AS(oracle_value(fixtures::g3()), ValidationError);
}

TEST_CASE("exhaustive stopping verdicts") {
    CHECK(oracle_stopping(fixtures::g1()));
    CHECK(oracle_stopping(fixtures::g2()));
    // The maximizer can cycle v0 <-> v1 regardless of fairness.
    CHECK_FALSE(oracle_stopping(fixtures::g3()));
    CHECK(oracle_stopping(fixtures::g4()));
    CHECK(oracle_stopping(fixtures::g5()));
    CHECK(oracle_stopping(fixtures::g6()));
}
