#pragma once

#include "fairgame/game.hpp"
#include "fairgame/strategy.hpp"

namespace fairgame {

// Expected total reward of a Markov chain that reaches the terminal set with
// probability 1 from every vertex: the unique solution of (I - A)x = r where
// A is the transition matrix with terminal rows zeroed. Terminal vertices get
// exactly 0.
//
// Dense LU with partial pivoting up to kDenseSolveLimit vertices; above that
// the chain is split into strongly connected components and one dense block
// is eliminated per component in condensation order, which stays exact. A
// singular system means the almost-sure-termination precondition was violated
// and raises SingularSystemError instead of returning garbage.
ValueVector chain_expected_reward(const InducedChain& chain);

inline constexpr int kDenseSolveLimit = 2000;

// In-place dense LU solve of the n x n row-major system a·x = b. The matrix
// and right-hand side are consumed; x is returned. Exposed for tests.
ValueVector dense_lu_solve(std::vector<double>& a, std::vector<double>& b, int n);

}  // namespace fairgame
