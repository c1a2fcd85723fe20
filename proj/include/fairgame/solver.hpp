#pragma once

#include <vector>

#include "fairgame/game.hpp"
#include "fairgame/kernels.hpp"
#include "fairgame/strategy.hpp"

namespace fairgame {

struct SolveOptions {
    double epsilon = 1e-6;            // relative residual target
    long max_iterations = 1'000'000;  // value-iteration budget
    double margin = 1e-6;             // upper-bound inflation factor
    double postmin_tolerance = 1e-9;  // successor matching in Min synthesis
    KernelKind kernel = KernelKind::Auto;
};

struct Solution {
    ValueVector values;
    DetMemorylessStrategy sigma1;  // Max; empty choices when not converged
    DetMemorylessStrategy sigma2;  // Min; empty choices when not converged
    long iterations = 0;
    double residual = 0.0;
    ValueVector upper_bound;
    bool converged = false;
};

// One application of the Bellman functional:
//   terminals 0, Prob vertices reward + expected successor value, Max/Min
//   vertices reward + best/worst successor value.
// The game value is this functional's greatest fixed point over [0, upper].
ValueVector gamma_apply(const GameGraph& game, const ValueVector& f,
                        KernelKind kernel = KernelKind::Auto);

// Optimal expected total reward of a maximizing MDP whose every policy
// terminates almost surely. Policy iteration: start from the smallest-id
// choice everywhere, evaluate exactly, switch any vertex with an improvement
// beyond 1e-12 to its smallest-id improving successor, repeat.
ValueVector mdp_exact_value_max(const InducedMdp& mdp);

// (1 + margin) times the exact optimum of the uniform-Min MDP, 0 kept at
// terminals. Dominates the game value: the uniform strategy is one fair
// option for Min, so Max can only do better against the true optimum.
ValueVector upper_bound_vector(const GameGraph& game, double margin = 1e-6);

struct ValueIterationResult {
    ValueVector values;
    long iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

// Greatest-fixed-point iteration from above: f_{k+1} = min(f_k, Bellman(f_k))
// starting at the upper bound. The clamp keeps the sequence non-increasing
// while every iterate stays above the fixed point, so the limit is the fixed
// point itself. Stops when the relative residual drops below epsilon.
ValueIterationResult value_iteration_gfp(const GameGraph& game, const ValueVector& upper,
                                         double epsilon, long max_iterations,
                                         KernelKind kernel = KernelKind::Auto);

// BFS hop distance to the nearest terminal through unmasked edges (one mask
// entry per CSR edge; nullptr = all edges). Throws if some vertex cannot
// reach a terminal at all.
std::vector<int> distances_to_terminal(const GameGraph& game,
                                       const std::vector<uint8_t>* edge_mask = nullptr);

// Max picks the smallest-id successor with the best value.
DetMemorylessStrategy synthesize_max_strategy(const GameGraph& game, const ValueVector& values);

// Min keeps only value-optimal successors (within tolerance) and among them
// picks the one closest to a terminal, smallest id on ties. The distance rule
// is what makes the result fair and not merely optimal: always stepping
// toward a terminal cannot trap any Min vertex forever.
DetMemorylessStrategy synthesize_min_fair_strategy(const GameGraph& game,
                                                   const ValueVector& values,
                                                   double tolerance = 1e-9);

// Full pipeline: stopping check, upper bound, value iteration, syntheses.
// Throws NotStoppingError when the fairness analysis refuses the game. When
// value iteration exhausts its budget the Solution carries converged=false
// and no strategies (synthesis needs fixed-point values).
Solution solve(const GameGraph& game, const SolveOptions& options = {});

}  // namespace fairgame
