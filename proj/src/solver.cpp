#include "fairgame/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "fairgame/errors.hpp"
#include "fairgame/fairness.hpp"
#include "fairgame/linalg.hpp"

namespace fairgame {

ValueVector gamma_apply(const GameGraph& game, const ValueVector& f, KernelKind kernel) {
    if (f.size() != static_cast<size_t>(game.size())) {
        throw ValidationError("value vector does not match the game size");
    }
    ValueVector out(f.size(), 0.0);
    const Kernels& kern = select_kernels(kernel);
    const GameView view = make_view(game);
    kern.bellman_sweep(view, f.data(), out.data());
    return out;
}

namespace {

int smallest_successor(const GameGraph& game, int v) {
    auto succ = game.successors(v);
    return *std::min_element(succ.begin(), succ.end());
}

}  // namespace

ValueVector mdp_exact_value_max(const InducedMdp& mdp) {
    for (int v = 0; v < mdp.size(); ++v) {
        if (mdp.cls(v) == VertexClass::Min && !mdp.is_terminal(v)) {
            throw ValidationError("mdp still contains the Min vertex " + std::to_string(v));
        }
    }

    DetMemorylessStrategy policy;
    policy.owner = VertexClass::Max;
    policy.choice.assign(static_cast<size_t>(mdp.size()), DetMemorylessStrategy::kNone);
    bool any_max = false;
    for (int v = 0; v < mdp.size(); ++v) {
        if (mdp.cls(v) == VertexClass::Max && !mdp.is_terminal(v)) {
            policy.choice[static_cast<size_t>(v)] = smallest_successor(mdp, v);
            any_max = true;
        }
    }
    if (!any_max) {
        return chain_expected_reward(mdp);
    }

    constexpr double kImprovement = 1e-12;
    DetMemorylessStrategy none;
    none.owner = VertexClass::Min;
    none.choice.assign(static_cast<size_t>(mdp.size()), DetMemorylessStrategy::kNone);
    while (true) {
        const InducedChain chain = induce_chain(mdp, policy, none);
        const ValueVector x = chain_expected_reward(chain);
        bool improved = false;
        for (int v = 0; v < mdp.size(); ++v) {
            if (policy.choice[static_cast<size_t>(v)] == DetMemorylessStrategy::kNone) continue;
            auto succ = mdp.successors(v);
            std::vector<int32_t> ordered(succ.begin(), succ.end());
            std::sort(ordered.begin(), ordered.end());
            for (int32_t w : ordered) {
                const double offer = mdp.reward(v) + x[static_cast<size_t>(w)];
                if (offer > x[static_cast<size_t>(v)] + kImprovement) {
                    policy.choice[static_cast<size_t>(v)] = w;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) return x;
    }
}

ValueVector upper_bound_vector(const GameGraph& game, double margin) {
    const InducedMdp mdp = induce_mdp(game, uniform_min_strategy(game));
    ValueVector x = mdp_exact_value_max(mdp);
    for (int v = 0; v < game.size(); ++v) {
        if (game.is_terminal(v)) {
            x[static_cast<size_t>(v)] = 0.0;
        } else {
            x[static_cast<size_t>(v)] *= 1.0 + margin;
        }
    }
    return x;
}

ValueIterationResult value_iteration_gfp(const GameGraph& game, const ValueVector& upper,
                                         double epsilon, long max_iterations, KernelKind kernel) {
    if (upper.size() != static_cast<size_t>(game.size())) {
        throw ValidationError("upper bound vector does not match the game size");
    }
    const Kernels& kern = select_kernels(kernel);
    const GameView view = make_view(game);

    ValueIterationResult result;
    result.values = upper;
    ValueVector sweep(upper.size(), 0.0);
    for (long k = 1; k <= max_iterations; ++k) {
        kern.bellman_sweep(view, result.values.data(), sweep.data());
        result.residual = kern.clamp_descend(result.values.data(), sweep.data(), game.size());
        result.iterations = k;
        if (result.residual < epsilon) {
            result.converged = true;
            break;
        }
    }
    return result;
}

std::vector<int> distances_to_terminal(const GameGraph& game,
                                       const std::vector<uint8_t>* edge_mask) {
    const int n = game.size();
    // Reverse adjacency annotated with the forward edge index, so the mask
    // (which is per forward edge) can be honored while walking backwards.
    std::vector<int32_t> degree(static_cast<size_t>(n), 0);
    for (int e = 0; e < game.edge_count(); ++e) {
        ++degree[static_cast<size_t>(game.succ_data()[e])];
    }
    std::vector<int32_t> start(static_cast<size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) start[static_cast<size_t>(v) + 1] = start[static_cast<size_t>(v)] + degree[static_cast<size_t>(v)];
    std::vector<int32_t> pred(static_cast<size_t>(game.edge_count()), 0);
    std::vector<int32_t> pred_edge(static_cast<size_t>(game.edge_count()), 0);
    std::vector<int32_t> cursor(start.begin(), start.end() - 1);
    for (int v = 0; v < n; ++v) {
        for (int e = game.row_begin(v); e < game.row_end(v); ++e) {
            const int w = game.succ_data()[e];
            const int32_t slot = cursor[static_cast<size_t>(w)]++;
            pred[static_cast<size_t>(slot)] = v;
            pred_edge[static_cast<size_t>(slot)] = e;
        }
    }

    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
        if (game.is_terminal(v)) {
            dist[static_cast<size_t>(v)] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const int w = queue.front();
        queue.pop_front();
        for (int32_t i = start[static_cast<size_t>(w)]; i < start[static_cast<size_t>(w) + 1]; ++i) {
            const size_t fwd = static_cast<size_t>(pred_edge[static_cast<size_t>(i)]);
            if (edge_mask && !(*edge_mask)[fwd]) continue;
            const int v = pred[static_cast<size_t>(i)];
            if (dist[static_cast<size_t>(v)] == -1) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(w)] + 1;
                queue.push_back(v);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (dist[static_cast<size_t>(v)] == -1) {
            throw ValidationError("vertex " + std::to_string(v) +
                                  " cannot reach a terminal through the allowed edges");
        }
    }
    return dist;
}

DetMemorylessStrategy synthesize_max_strategy(const GameGraph& game, const ValueVector& values) {
    DetMemorylessStrategy s;
    s.owner = VertexClass::Max;
    s.choice.assign(static_cast<size_t>(game.size()), DetMemorylessStrategy::kNone);
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) != VertexClass::Max || game.is_terminal(v)) continue;
        int best = -1;
        double best_value = -std::numeric_limits<double>::infinity();
        for (int w : game.successors(v)) {
            const double val = values[static_cast<size_t>(w)];
            if (val > best_value || (val == best_value && w < best)) {
                best_value = val;
                best = w;
            }
        }
        s.choice[static_cast<size_t>(v)] = best;
    }
    return s;
}

DetMemorylessStrategy synthesize_min_fair_strategy(const GameGraph& game,
                                                   const ValueVector& values,
                                                   double tolerance) {
    // Keep only the value-optimal edges out of each Min vertex, then walk
    // toward terminals along them. Distances are measured through the reduced
    // edge set so the chosen successor is itself on an optimal path.
    std::vector<uint8_t> mask(static_cast<size_t>(game.edge_count()), 1);
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) != VertexClass::Min || game.is_terminal(v)) continue;
        bool kept = false;
        for (int e = game.row_begin(v); e < game.row_end(v); ++e) {
            const int w = game.succ_data()[e];
            const double offer = game.reward(v) + values[static_cast<size_t>(w)];
            const double scale = std::max(1.0, values[static_cast<size_t>(v)]);
            if (std::fabs(values[static_cast<size_t>(v)] - offer) <= tolerance * scale) {
                kept = true;
            } else {
                mask[static_cast<size_t>(e)] = 0;
            }
        }
        if (!kept) {
            throw ValidationError("values are not a fixed point at Min vertex " +
                                  std::to_string(v) + "; no optimal successor survives");
        }
    }

    const std::vector<int> dist = distances_to_terminal(game, &mask);

    DetMemorylessStrategy s;
    s.owner = VertexClass::Min;
    s.choice.assign(static_cast<size_t>(game.size()), DetMemorylessStrategy::kNone);
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) != VertexClass::Min || game.is_terminal(v)) continue;
        int best = -1;
        for (int e = game.row_begin(v); e < game.row_end(v); ++e) {
            if (!mask[static_cast<size_t>(e)]) continue;
            const int w = game.succ_data()[e];
            if (best == -1 || dist[static_cast<size_t>(w)] < dist[static_cast<size_t>(best)] ||
                (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(best)] && w < best)) {
                best = w;
            }
        }
        s.choice[static_cast<size_t>(v)] = best;
    }
    return s;
}

Solution solve(const GameGraph& game, const SolveOptions& options) {
    const StoppingReport report = is_stopping_under_fairness(game);
    if (!report.stopping) {
        throw NotStoppingError(report.witness.to_ids());
    }

    Solution solution;
    solution.upper_bound = upper_bound_vector(game, options.margin);
    ValueIterationResult vi = value_iteration_gfp(game, solution.upper_bound, options.epsilon,
                                                  options.max_iterations, options.kernel);
    solution.values = std::move(vi.values);
    solution.iterations = vi.iterations;
    solution.residual = vi.residual;
    solution.converged = vi.converged;

    solution.sigma1.owner = VertexClass::Max;
    solution.sigma2.owner = VertexClass::Min;
    if (solution.converged) {
        solution.sigma1 = synthesize_max_strategy(game, solution.values);
        // Iteration stops with the values one sweep short of consistency:
        // f(v) was computed from the previous iterate, so f(v) and
        // reward + f(w) can disagree by up to the final residual (relative).
        // Widen the matching tolerance accordingly or the true minimizer
        // itself gets pruned; exact fixed points (residual 0) keep the floor.
        const double synthesis_tolerance =
            std::max(options.postmin_tolerance, 10.0 * solution.residual);
        solution.sigma2 =
            synthesize_min_fair_strategy(game, solution.values, synthesis_tolerance);
    } else {
        solution.sigma1.choice.assign(static_cast<size_t>(game.size()),
                                      DetMemorylessStrategy::kNone);
        solution.sigma2.choice.assign(static_cast<size_t>(game.size()),
                                      DetMemorylessStrategy::kNone);
    }
    return solution;
}

}  // namespace fairgame
