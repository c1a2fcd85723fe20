#pragma once

#include <vector>

#include "fairgame/game.hpp"

namespace fairgame {

// Strongly connected components of the game's edge relation (probabilities
// ignored). Components are numbered in reverse topological order as Tarjan
// emits them: every edge leaving a component points to a lower component id.
struct SccDecomposition {
    std::vector<int> component;  // vertex id -> component id
    int component_count = 0;
    // True if the component has no edge to a different component. For a
    // Markov chain these are exactly the bottom SCCs.
    std::vector<uint8_t> is_bottom;

    std::vector<std::vector<int>> members() const;
};

// Iterative Tarjan, safe for deep graphs. `edge_mask`, when non-null, must
// have one entry per CSR edge; edges with mask 0 are treated as absent.
SccDecomposition strongly_connected_components(const GameGraph& game,
                                               const std::vector<uint8_t>* edge_mask = nullptr);

}  // namespace fairgame
