#include <doctest.h>

#include <cmath>
#include <vector>

#include "fairgame/errors.hpp"
#include "fairgame/fairness.hpp"
#include "fairgame/oracle.hpp"
#include "fairgame/solver.hpp"
#include "fairgame/strategy.hpp"
#include "support/fixtures.hpp"

using namespace fairgame;

TEST_CASE("bellman application at frozen points") {
    const GameGraph g = fixtures::g1();
    // v0 (Max, reward 1) tracks f(v1); v1 (Min) takes the smaller of f(v0)
    // and f(t).
    CHECK(gamma_apply(g, {0.0, 0.0, 0.0}) == ValueVector{1.0, 0.0, 0.0});
    CHECK(gamma_apply(g, {2.0, 1.0, 0.0}) == ValueVector{2.0, 0.0, 0.0});
}

TEST_CASE("all-terminal game collapses immediately") {
    const GameGraph g = GameGraph::from_vertices(
        {
            {VertexClass::Prob, 0.0, {{0, 1.0}}},
            {VertexClass::Prob, 0.0, {{1, 1.0}}},
        },
        0);
    const Solution s = solve(g);
    CHECK(s.converged);
    CHECK(s.values == ValueVector{0.0, 0.0});
    CHECK(s.iterations == 1);
}

TEST_CASE("uniform-chance optimum of the release game") {
    // Uniform Min at v1 gives x1 = x0/2, x0 = 1 + x1, so (2, 1, 0).
    const InducedMdp mdp = induce_mdp(fixtures::g1(), uniform_min_strategy(fixtures::g1()));
    const ValueVector x = mdp_exact_value_max(mdp);
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(x[2] == 0.0);
}

TEST_CASE("mdp optimizer refuses leftover Min vertices") {
    CHECK_THROWS_AS(mdp_exact_value_max(fixtures::g1()), ValidationError);
}

TEST_CASE("upper bound inflates the uniform optimum") {
    const ValueVector ub = upper_bound_vector(fixtures::g1(), 1e-6);
    CHECK(ub[0] == doctest::Approx(2.000002).epsilon(1e-12));
    CHECK(ub[1] == doctest::Approx(1.000001).epsilon(1e-12));
    CHECK(ub[2] == 0.0);
}

TEST_CASE("value iteration walks down to the fixed point in three sweeps") {
    const GameGraph g = fixtures::g1();
    const ValueVector ub = upper_bound_vector(g, 1e-6);
    const ValueIterationResult r = value_iteration_gfp(g, ub, 1e-6, 1'000'000);
    CHECK(r.converged);
    // Sweep 1 pulls v1 to 0, sweep 2 pulls v0 to 1, sweep 3 confirms.
    CHECK(r.iterations == 3);
    CHECK(r.values[0] == 1.0);
    CHECK(r.values[1] == 0.0);
    CHECK(r.values[2] == 0.0);
    CHECK(r.residual == 0.0);
}

TEST_CASE("geometric game converges in one sweep from the inflated bound") {
    const GameGraph g = fixtures::g2();
    const ValueVector ub = upper_bound_vector(g, 1e-6);
    const ValueIterationResult r = value_iteration_gfp(g, ub, 1e-6, 1'000'000);
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    // One sweep lands on 1 + ub/2 = 2.000001; the residual 5e-7 is already
    // under the relative target.
    CHECK(r.values[0] == doctest::Approx(2.000001).epsilon(1e-12));
    CHECK(std::abs(r.values[0] - 2.0) / 2.0 <= 1e-6);
}

TEST_CASE("full solve of the release game") {
    const Solution s = solve(fixtures::g1());
    CHECK(s.converged);
    CHECK(s.iterations == 3);
    CHECK(s.residual == 0.0);
    CHECK(s.values[0] == 1.0);
    CHECK(s.values[1] == 0.0);
    CHECK(s.values[2] == 0.0);
    CHECK(s.sigma1.at(0) == 1);
    CHECK(s.sigma2.at(1) == 2);
    CHECK(s.upper_bound[0] == doctest::Approx(2.000002).epsilon(1e-12));
}

TEST_CASE("solve refuses non-stopping games with the witness") {
    try {
        solve(fixtures::g3());
        FAIL("expected NotStoppingError");
    } catch (const NotStoppingError& e) {
        CHECK(e.witness == std::vector<int>{0, 1});
    }
}

TEST_CASE("solve picks the higher branch on the branching game") {
    const Solution s = solve(fixtures::g4());
    CHECK(s.converged);
    CHECK(std::abs(s.values[0] - 3.0) <= 1e-5);
    CHECK(std::abs(s.values[1] - 2.5) <= 1e-5);
    CHECK(std::abs(s.values[2] - 3.0) <= 1e-5);
    CHECK(s.sigma1.at(0) == 2);
    CHECK(s.sigma2.at(2) == 3);
}

TEST_CASE("solve lets Min take the cheap branch") {
    const Solution s = solve(fixtures::g5());
    CHECK(std::abs(s.values[0] - 2.0) <= 1e-5);
    CHECK(s.sigma2.at(0) == 2);
}

TEST_CASE("fairness forces the release value and the releasing strategy") {
    const GameGraph g = fixtures::g6();
    const Solution s = solve(g);
    CHECK(s.converged);
    for (int v = 0; v < 3; ++v) CHECK(std::abs(s.values[static_cast<size_t>(v)] - 7.0) <= 1e-5);
    // Both successors of v0 are value-optimal; the hop-distance tie-break
    // must pick the exit w, which is what keeps the strategy fair.
    CHECK(s.sigma2.at(0) == 2);
    CHECK(is_fair_det_strategy(g, s.sigma2));
}

TEST_CASE("exhausted budget reports non-convergence without strategies") {
    const Solution s = solve(fixtures::g1(), SolveOptions{1e-6, 1, 1e-6, 1e-9, KernelKind::Auto});
    CHECK_FALSE(s.converged);
    CHECK(s.iterations == 1);
    for (int v = 0; v < 3; ++v) {
        CHECK(s.sigma1.at(v) == DetMemorylessStrategy::kNone);
        CHECK(s.sigma2.at(v) == DetMemorylessStrategy::kNone);
    }
}

TEST_CASE("terminal distances honor edge masks") {
    const GameGraph g = fixtures::g6();
    CHECK(distances_to_terminal(g) == std::vector<int>{2, 3, 1, 0});
    // Masking v0 -> w cuts the only route from the loop to the terminal.
    std::vector<uint8_t> mask(static_cast<size_t>(g.edge_count()), 1);
    mask[static_cast<size_t>(g.row_begin(0) + 1)] = 0;
    CHECK_THROWS_AS(distances_to_terminal(g, &mask), ValidationError);
}

TEST_CASE("min synthesis rejects values that are no fixed point") {
    const GameGraph g = fixtures::g5();
    ValueVector fake = {0.0, 5.0, 2.0, 0.0};
    CHECK_THROWS_AS(synthesize_min_fair_strategy(g, fake), ValidationError);
}

TEST_CASE("bellman operator is monotone") {
    for (uint64_t seed = 300; seed < 330; ++seed) {
        const GameGraph g = fixtures::random_game(seed);
        SplitMix64 sm(seed * 7);
        ValueVector lo(static_cast<size_t>(g.size()));
        ValueVector hi(static_cast<size_t>(g.size()));
        for (size_t i = 0; i < lo.size(); ++i) {
            lo[i] = static_cast<double>(sm.next() % 100) / 9.0;
            hi[i] = lo[i] + static_cast<double>(sm.next() % 100) / 9.0;
        }
        const ValueVector glo = gamma_apply(g, lo);
        const ValueVector ghi = gamma_apply(g, hi);
        for (size_t i = 0; i < lo.size(); ++i) CHECK(glo[i] <= ghi[i]);
    }
}

TEST_CASE("clamped iterates descend and stay above the fixed point") {
    for (uint64_t seed = 400; seed < 420; ++seed) {
        const GameGraph g = fixtures::random_game(seed);
        if (!is_stopping_under_fairness(g).stopping) continue;
        const Solution s = solve(g, SolveOptions{1e-9, 1'000'000, 1e-6, 1e-9, KernelKind::Auto});
        REQUIRE(s.converged);
        ValueVector f = upper_bound_vector(g);
        for (int step = 0; step < 25; ++step) {
            const ValueVector gf = gamma_apply(g, f);
            for (size_t v = 0; v < f.size(); ++v) {
                const double next = std::min(f[v], gf[v]);
                CHECK(next <= f[v]);
                f[v] = next;
            }
            for (size_t v = 0; v < f.size(); ++v) {
                CHECK(f[v] >= s.values[v] - 1e-7 * std::max(1.0, s.values[v]));
            }
        }
    }
}

TEST_CASE("scalar and selected kernels give identical solutions") {
    for (uint64_t seed = 500; seed < 530; ++seed) {
        const GameGraph g = fixtures::random_game(seed, fixtures::CorpusOptions{4, 30, 4, 4});
        if (!is_stopping_under_fairness(g).stopping) continue;
        SolveOptions scalar_opts;
        scalar_opts.kernel = KernelKind::Scalar;
        SolveOptions auto_opts;
        auto_opts.kernel = KernelKind::Auto;
        const Solution a = solve(g, scalar_opts);
        const Solution b = solve(g, auto_opts);
        CHECK(a.iterations == b.iterations);
        CHECK(a.residual == b.residual);
        for (size_t v = 0; v < a.values.size(); ++v) CHECK(a.values[v] == b.values[v]);
    }
}
