#pragma once

#include <vector>

#include "fairgame/bitset.hpp"
#include "fairgame/game.hpp"

namespace fairgame {

// Qualitative analysis deciding whether the Min player, restricted to fair
// behavior, can be forced to reach a terminal vertex almost surely from
// everywhere. Fairness only binds Min: whenever a Min vertex recurs forever,
// all of its successors must recur too. The operators below bake that
// asymmetry into otherwise standard predecessor computations.

// One application of the universal predecessor operator:
//   Min/Prob vertices enter if some successor is in C (fairness or chance
//   will eventually push the play there), Max vertices only if all successors
//   are in C (Max picks the successor).
VertexSet forall_pre_f(const GameGraph& game, const VertexSet& c);

// One application of the existential predecessor operator: any vertex with
// some successor in C.
VertexSet exists_pre_f(const GameGraph& game, const VertexSet& c);

// Least fixed points of X = seed ∪ Pre(X), via reverse-edge worklists.
VertexSet forall_pre_star(const GameGraph& game, const VertexSet& seed);
VertexSet exists_pre_star(const GameGraph& game, const VertexSet& seed);

// Vertices from which every (Max strategy, fair Min strategy) pair reaches a
// terminal almost surely.
VertexSet almost_sure_vertices(const GameGraph& game);

struct StoppingReport {
    bool stopping = false;
    // Empty iff stopping. Otherwise the closure set from which Max can keep
    // the play away from terminals forever, fairness notwithstanding.
    VertexSet witness;
    VertexSet almost_sure;
    // One trapped end component inside the witness (empty when stopping):
    // a strongly connected set Max can confine the play to. Reported for
    // diagnostics.
    std::vector<int> trapped_component;
};

StoppingReport is_stopping_under_fairness(const GameGraph& game);

// Independent route to the same answer: fix the uniform Min strategy and ask
// whether the resulting MDP terminates almost surely under every Max
// strategy. Agreement with is_stopping_under_fairness is a tested invariant.
bool check_via_uniform_mdp(const GameGraph& game);

}  // namespace fairgame
