#pragma once

#include <vector>

#include "fairgame/game.hpp"
#include "fairgame/strategy.hpp"

namespace fairgame {

// Brute-force ground truth on small games: enumerate deterministic memoryless
// strategies outright and take the max-min over the fair ones. Everything
// here is exponential by design and guarded accordingly; the point is an
// implementation with no shared machinery beyond the chain linear solve, so
// the solver can be tested against it.

inline constexpr int kOracleMaxOwnedPerPlayer = 12;
inline constexpr long kOracleMaxStrategiesPerPlayer = 200'000;

// All deterministic memoryless strategies for one player, ordered
// lexicographically by vertex id with successor ids ascending. Throws
// SizeGuardError beyond the limits above.
std::vector<DetMemorylessStrategy> enumerate_strategies(const GameGraph& game,
                                                        VertexClass owner);

// A deterministic memoryless Min strategy is fair iff no Max strategy can
// steer the induced chain into a long-run trap that keeps visiting some Min
// vertex while starving one of its successors. Concretely: for every
// deterministic memoryless Max strategy, every non-terminal bottom SCC of the
// induced chain must contain, for each Min vertex in it, all of that vertex's
// game successors.
bool is_fair_det_strategy(const GameGraph& game, const DetMemorylessStrategy& sigma2);

// Per-vertex max over Max strategies of the min over fair Min strategies of
// the expected total reward. Requires the game to be stopping under fairness
// (every enumerated pair then terminates almost surely; violations throw).
ValueVector oracle_value(const GameGraph& game);

// Whether every (Max strategy, fair Min strategy) pair reaches a terminal
// almost surely from every vertex. The Min candidates are the fair
// deterministic strategies plus the uniform one; the uniform strategy is
// always fair and covers games where no deterministic Min strategy is.
bool oracle_stopping(const GameGraph& game);

}  // namespace fairgame
