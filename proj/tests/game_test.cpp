#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "fairgame/errors.hpp"
#include "fairgame/game.hpp"
#include "support/fixtures.hpp"

using namespace fairgame;

TEST_CASE("construction keeps classes, rewards and edge order") {
    const GameGraph g = fixtures::g1();
    CHECK(g.size() == 3);
    CHECK(g.initial() == 0);
    CHECK(g.cls(0) == VertexClass::Max);
    CHECK(g.cls(1) == VertexClass::Min);
    CHECK(g.cls(2) == VertexClass::Prob);
    CHECK(g.reward(0) == 1.0);
    CHECK(g.out_degree(1) == 2);
    CHECK(g.successors(1)[0] == 0);
    CHECK(g.successors(1)[1] == 2);
    CHECK(g.edge_count() == 4);
    CHECK(g.count_class(VertexClass::Max) == 1);
    CHECK(g.count_class(VertexClass::Min) == 1);
    CHECK(g.count_class(VertexClass::Prob) == 1);
}

TEST_CASE("terminal means exactly a probability-1 self-loop") {
    const GameGraph g = fixtures::g1();
    CHECK_FALSE(g.is_terminal(0));
    CHECK_FALSE(g.is_terminal(1));
    CHECK(g.is_terminal(2));
    CHECK(g.terminal_set().to_ids() == std::vector<int>{2});

    // A self-loop with extra mass elsewhere is not terminal.
    const GameGraph h = GameGraph::from_vertices(
        {
            {VertexClass::Prob, 0.0, {{0, 0.5}, {1, 0.5}}},
            {VertexClass::Prob, 0.0, {{1, 1.0}}},
        },
        0);
    CHECK_FALSE(h.is_terminal(0));
    CHECK(h.is_terminal(1));
}

TEST_CASE("terminals must carry reward zero") {
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Prob, 1.0, {{0, 1.0}}},
                        },
                        0),
                    ValidationError);
}

TEST_CASE("rewards must be finite and non-negative") {
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Max, -0.5, {{1, 1.0}}},
                            {VertexClass::Prob, 0.0, {{1, 1.0}}},
                        },
                        0),
                    ValidationError);
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Max, std::nan(""), {{1, 1.0}}},
                            {VertexClass::Prob, 0.0, {{1, 1.0}}},
                        },
                        0),
                    ValidationError);
}

TEST_CASE("every vertex needs at least one successor") {
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Max, 0.0, {}},
                            {VertexClass::Prob, 0.0, {{1, 1.0}}},
                        },
                        0),
                    ValidationError);
}

TEST_CASE("player edges carry probability exactly one") {
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Max, 0.0, {{1, 0.5}}},
                            {VertexClass::Prob, 0.0, {{1, 1.0}}},
                        },
                        0),
                    ValidationError);
}

TEST_CASE("probability rows must sum to one within tolerance") {
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Prob, 0.0, {{0, 0.5}, {1, 0.4}}},
                            {VertexClass::Prob, 0.0, {{1, 1.0}}},
                        },
                        0),
                    ValidationError);
    // A few ulps of slack are fine.
    const GameGraph g = GameGraph::from_vertices(
        {
            {VertexClass::Prob, 0.0, {{0, 0.5}, {1, 0.5 + 5e-10}}},
            {VertexClass::Prob, 0.0, {{1, 1.0}}},
        },
        0);
    CHECK(g.size() == 2);
}

TEST_CASE("non-positive probabilities and duplicate successors are rejected") {
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Prob, 0.0, {{0, 1.5}, {1, -0.5}}},
                            {VertexClass::Prob, 0.0, {{1, 1.0}}},
                        },
                        0),
                    ValidationError);
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Prob, 0.0, {{1, 0.5}, {1, 0.5}}},
                            {VertexClass::Prob, 0.0, {{1, 1.0}}},
                        },
                        0),
                    ValidationError);
}

TEST_CASE("successor ids and the initial vertex must be in range") {
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Max, 0.0, {{5, 1.0}}},
                            {VertexClass::Prob, 0.0, {{1, 1.0}}},
                        },
                        0),
                    ValidationError);
    CHECK_THROWS_AS(GameGraph::from_vertices(
                        {
                            {VertexClass::Prob, 0.0, {{0, 1.0}}},
                        },
                        3),
                    ValidationError);
}

TEST_CASE("reverse adjacency inverts the edge relation") {
    const GameGraph g = fixtures::g1();
    const GameGraph::Reverse rev = g.reverse_edges();
    REQUIRE(rev.row_begin.size() == 4);
    // Predecessors of v0: v1. Of v1: v0. Of t: v1 and t itself.
    std::vector<int> pred0(rev.pred.begin() + rev.row_begin[0],
                           rev.pred.begin() + rev.row_begin[1]);
    std::vector<int> pred2(rev.pred.begin() + rev.row_begin[2],
                           rev.pred.begin() + rev.row_begin[3]);
    CHECK(pred0 == std::vector<int>{1});
    CHECK(pred2 == std::vector<int>{1, 2});
}

TEST_CASE("class names render lowercase") {
    CHECK(std::string(to_string(VertexClass::Max)) == "max");
    CHECK(std::string(to_string(VertexClass::Min)) == "min");
    CHECK(std::string(to_string(VertexClass::Prob)) == "prob");
}
