#include <doctest.h>

#include <vector>

#include "fairgame/fairness.hpp"
#include "support/fixtures.hpp"

using namespace fairgame;

namespace {

VertexSet ids_to_set(int n, const std::vector<int>& ids) {
    VertexSet s(n);
    for (int v : ids) s.set(v);
    return s;
}

}  // namespace

TEST_CASE("single pre-operator applications on g1") {
    const GameGraph g = fixtures::g1();
    const VertexSet t = ids_to_set(3, {2});

    // v1 is Min with successor t; v0 is Max and its only successor v1 is
    // outside; t keeps itself via the self-loop.
    CHECK(forall_pre_f(g, t).to_ids() == std::vector<int>{1, 2});
    CHECK(exists_pre_f(g, t).to_ids() == std::vector<int>{1, 2});

    // From {v0}: v1 (Min, successor v0) enters both; nothing else does.
    const VertexSet v0 = ids_to_set(3, {0});
    CHECK(forall_pre_f(g, v0).to_ids() == std::vector<int>{0, 1});
    CHECK(exists_pre_f(g, v0).to_ids() == std::vector<int>{0, 1});
}

TEST_CASE("max vertices need all successors for the universal operator") {
    const GameGraph g = fixtures::g3();
    // v0 is Max with successors {v1, t}; t alone is not enough.
    const VertexSet t = ids_to_set(3, {2});
    CHECK(forall_pre_f(g, t).to_ids() == std::vector<int>{2});
    // The existential operator picks v0 up immediately.
    CHECK(exists_pre_f(g, t).to_ids() == std::vector<int>{0, 2});
}

TEST_CASE("closures on the fixtures") {
    const GameGraph g1 = fixtures::g1();
    CHECK(forall_pre_star(g1, ids_to_set(3, {2})).to_ids() == std::vector<int>{0, 1, 2});

    const GameGraph g3 = fixtures::g3();
    // The maximizer can keep the play inside {v0, v1} forever.
    CHECK(forall_pre_star(g3, ids_to_set(3, {2})).to_ids() == std::vector<int>{2});
    CHECK(exists_pre_star(g3, ids_to_set(3, {0, 1})).to_ids() == std::vector<int>{0, 1});

    const GameGraph g6 = fixtures::g6();
    // Fairness pulls the Min loop v0 <-> v1 in through the exit w.
    CHECK(forall_pre_star(g6, ids_to_set(4, {3})).to_ids() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("closure is monotone in the seed") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        const GameGraph g = fixtures::random_game(seed);
        const VertexSet small = g.terminal_set();
        VertexSet big = small;
        big.set(0);
        const VertexSet closure_small = forall_pre_star(g, small);
        const VertexSet closure_big = forall_pre_star(g, big);
        for (int v = 0; v < g.size(); ++v) {
            if (closure_small.test(v)) CHECK(closure_big.test(v));
        }
    }
}

TEST_CASE("iterating the single-step operator reaches the closure") {
    for (uint64_t seed = 200; seed < 230; ++seed) {
        const GameGraph g = fixtures::random_game(seed);
        VertexSet x = g.terminal_set();
        while (true) {
            const VertexSet next = forall_pre_f(g, x);
            if (next.to_ids() == x.to_ids()) break;
            x = next;
        }
        CHECK(x.to_ids() == forall_pre_star(g, g.terminal_set()).to_ids());
    }
}

TEST_CASE("stopping verdicts and witnesses on the fixtures") {
    const StoppingReport r1 = is_stopping_under_fairness(fixtures::g1());
    CHECK(r1.stopping);
    CHECK(r1.witness.count() == 0);
    CHECK(r1.almost_sure.to_ids() == std::vector<int>{0, 1, 2});
    CHECK(r1.trapped_component.empty());

    const StoppingReport r3 = is_stopping_under_fairness(fixtures::g3());
    CHECK_FALSE(r3.stopping);
    CHECK(r3.witness.to_ids() == std::vector<int>{0, 1});
    CHECK(r3.almost_sure.to_ids() == std::vector<int>{2});
    // The trapped component is the loop itself.
    CHECK(r3.trapped_component == std::vector<int>{0, 1});

    CHECK(is_stopping_under_fairness(fixtures::g2()).stopping);
    CHECK(is_stopping_under_fairness(fixtures::g4()).stopping);
    CHECK(is_stopping_under_fairness(fixtures::g5()).stopping);
    CHECK(is_stopping_under_fairness(fixtures::g6()).stopping);
}

TEST_CASE("almost-sure set matches the report") {
    const GameGraph g = fixtures::g3();
    CHECK(almost_sure_vertices(g).to_ids() == is_stopping_under_fairness(g).almost_sure.to_ids());
}

TEST_CASE("uniform-chain route agrees on fixtures and randoms") {
    CHECK(check_via_uniform_mdp(fixtures::g1()));
    CHECK_FALSE(check_via_uniform_mdp(fixtures::g3()));
    CHECK(check_via_uniform_mdp(fixtures::g6()));
    for (uint64_t seed = 100; seed < 180; ++seed) {
        const GameGraph g = fixtures::random_game(seed);
        CHECK(is_stopping_under_fairness(g).stopping == check_via_uniform_mdp(g));
    }
}
