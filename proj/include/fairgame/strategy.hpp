#pragma once

#include <vector>

#include "fairgame/game.hpp"

namespace fairgame {

// Deterministic memoryless strategy for one player: a chosen successor for
// every owned non-terminal vertex, kNone everywhere else.
struct DetMemorylessStrategy {
    static constexpr int kNone = -1;

    VertexClass owner = VertexClass::Max;
    std::vector<int> choice;  // indexed by vertex id

    int at(int v) const { return choice[static_cast<size_t>(v)]; }
    bool covers(int v) const { return at(v) != kNone; }
};

// Memoryless strategy in distribution form, used where randomized strategies
// are meaningful (simulation, the uniform Min strategy). Rows are only present
// for owned non-terminal vertices.
struct MemorylessPolicy {
    VertexClass owner = VertexClass::Max;
    // Per vertex: list of (successor, probability); empty if not owned here.
    std::vector<std::vector<std::pair<int, double>>> rows;

    static MemorylessPolicy from_det(const GameGraph& game, const DetMemorylessStrategy& s);
    bool covers(int v) const { return !rows[static_cast<size_t>(v)].empty(); }
};

// The Min strategy assigning probability 1/#post(v) to every successor of
// every non-terminal Min vertex.
MemorylessPolicy uniform_min_strategy(const GameGraph& game);

// Fixing the Min player turns the game into a maximizing MDP; fixing both
// players leaves a Markov chain. Both are represented as GameGraph instances
// again (resolved player vertices become Prob vertices), so every analysis
// applies unchanged downstream.
using InducedMdp = GameGraph;
using InducedChain = GameGraph;

// Replaces each non-terminal Min vertex by a Prob vertex with the strategy's
// row. Throws ValidationError if the strategy misses an owned vertex or picks
// a non-successor.
InducedMdp induce_mdp(const GameGraph& game, const MemorylessPolicy& sigma2);
InducedMdp induce_mdp(const GameGraph& game, const DetMemorylessStrategy& sigma2);

// Resolves both players. Any of the strategy arguments may be ignored for
// games that lack the corresponding vertices (e.g. an InducedMdp has no Min
// vertices left, so sigma2 coverage is not required there).
InducedChain induce_chain(const GameGraph& game, const DetMemorylessStrategy& sigma1,
                          const DetMemorylessStrategy& sigma2);
InducedChain induce_chain(const GameGraph& game, const MemorylessPolicy& sigma1,
                          const MemorylessPolicy& sigma2);

}  // namespace fairgame
