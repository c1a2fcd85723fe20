#pragma once

#include <vector>

#include "fairgame/game.hpp"
#include "fairgame/sim.hpp"

namespace fixtures {

using namespace fairgame;

// Hand-analyzed miniature games. The values quoted in the tests come from
// solving each game's fixed-point equations on paper; every test that pins a
// number cites the equation in a comment next to the check.

// v0 (Max, reward 1) -> v1; v1 (Min) -> {v0, t}. A fair Min must eventually
// take t, so the play collects the reward exactly once: values (1, 0, 0).
inline GameGraph g1() {
    return GameGraph::from_vertices(
        {
            {VertexClass::Max, 1.0, {{1, 1.0}}},
            {VertexClass::Min, 0.0, {{0, 1.0}, {2, 1.0}}},
            {VertexClass::Prob, 0.0, {{2, 1.0}}},
        },
        0);
}

// v0 (Prob, reward 1) -> {t: 1/2, v0: 1/2}. Geometric number of visits:
// x = 1 + x/2, so the value at v0 is exactly 2.
inline GameGraph g2() {
    return GameGraph::from_vertices(
        {
            {VertexClass::Prob, 1.0, {{1, 0.5}, {0, 0.5}}},
            {VertexClass::Prob, 0.0, {{1, 1.0}}},
        },
        0);
}

// v0 (Max) -> {v1, t}; v1 (Max) -> {v0}. The maximizer can cycle v0 <-> v1
// forever; fairness binds only the minimizer, so the game is not stopping.
inline GameGraph g3() {
    return GameGraph::from_vertices(
        {
            {VertexClass::Max, 0.0, {{1, 1.0}, {2, 1.0}}},
            {VertexClass::Max, 0.0, {{0, 1.0}}},
            {VertexClass::Prob, 0.0, {{2, 1.0}}},
        },
        0);
}

// v0 (Max) -> {v1, v2}; v1 (Prob, reward 1) -> {t: 1/2, v0: 1/2};
// v2 (Min, reward 3) -> {t}. With a = value(v0): via v1 the equations give
// a = 1 + a/2 = 2, via v2 they give 3, so values are (3, 2.5, 3, 0).
inline GameGraph g4() {
    return GameGraph::from_vertices(
        {
            {VertexClass::Max, 0.0, {{1, 1.0}, {2, 1.0}}},
            {VertexClass::Prob, 1.0, {{3, 0.5}, {0, 0.5}}},
            {VertexClass::Min, 3.0, {{3, 1.0}}},
            {VertexClass::Prob, 0.0, {{3, 1.0}}},
        },
        0);
}

// v0 (Min) -> {v1, v2}; v1 (Max, reward 5) -> {t}; v2 (Prob, reward 2) -> {t}.
// Min prefers v2: values (2, 5, 2, 0) and the optimal choice at v0 is v2.
inline GameGraph g5() {
    return GameGraph::from_vertices(
        {
            {VertexClass::Min, 0.0, {{1, 1.0}, {2, 1.0}}},
            {VertexClass::Max, 5.0, {{3, 1.0}}},
            {VertexClass::Prob, 2.0, {{3, 1.0}}},
            {VertexClass::Prob, 0.0, {{3, 1.0}}},
        },
        0);
}

// v0 (Min) -> {v1, w}; v1 (Max) -> {v0}; w (Max, reward 7) -> {t}. Always
// choosing v1 starves w and is unfair, so Min must eventually release the
// play through w: values (7, 7, 7, 0). An unconstrained minimizer could
// force 0 by looping, which is exactly what fairness rules out.
inline GameGraph g6() {
    return GameGraph::from_vertices(
        {
            {VertexClass::Min, 0.0, {{1, 1.0}, {2, 1.0}}},
            {VertexClass::Max, 0.0, {{0, 1.0}}},
            {VertexClass::Max, 7.0, {{3, 1.0}}},
            {VertexClass::Prob, 0.0, {{3, 1.0}}},
        },
        0);
}

// Seeded random game for the comparison corpora. The last vertex is the only
// guaranteed terminal; everything else gets a random class, a reward in
// [0, max_reward] and up to max_out_degree distinct successors.
struct CorpusOptions {
    int min_vertices = 3;
    int max_vertices = 8;
    int max_out_degree = 3;
    int max_reward = 4;
};

inline GameGraph random_game(uint64_t seed, const CorpusOptions& opt = {}) {
    SplitMix64 sm(seed);
    const uint64_t span = static_cast<uint64_t>(opt.max_vertices - opt.min_vertices + 1);
    const int n = opt.min_vertices + static_cast<int>(sm.next() % span);
    std::vector<VertexSpec> specs(static_cast<size_t>(n));
    specs[static_cast<size_t>(n - 1)] = {VertexClass::Prob, 0.0, {{n - 1, 1.0}}};
    for (int v = 0; v + 1 < n; ++v) {
        VertexSpec& spec = specs[static_cast<size_t>(v)];
        const uint64_t kind = sm.next() % 3;
        spec.cls = kind == 0   ? VertexClass::Max
                   : kind == 1 ? VertexClass::Min
                               : VertexClass::Prob;
        spec.reward = static_cast<double>(sm.next() % static_cast<uint64_t>(opt.max_reward + 1));
        const int degree = 1 + static_cast<int>(sm.next() % static_cast<uint64_t>(opt.max_out_degree));
        std::vector<int> targets;
        for (int d = 0; d < degree; ++d) {
            const int w = static_cast<int>(sm.next() % static_cast<uint64_t>(n));
            bool seen = false;
            for (int t : targets) seen = seen || t == w;
            if (!seen) targets.push_back(w);
        }
        // A lone self-loop would read as a terminal; retarget it.
        if (targets.size() == 1 && targets[0] == v) targets[0] = (v + 1) % n;
        if (spec.cls == VertexClass::Prob) {
            std::vector<double> weights;
            double total = 0.0;
            for (size_t i = 0; i < targets.size(); ++i) {
                weights.push_back(1.0 + static_cast<double>(sm.next() % 8));
                total += weights.back();
            }
            for (size_t i = 0; i < targets.size(); ++i) {
                spec.succ.push_back({targets[i], weights[i] / total});
            }
        } else {
            for (int t : targets) spec.succ.push_back({t, 1.0});
        }
    }
    return GameGraph::from_vertices(std::move(specs), 0);
}

}  // namespace fixtures
