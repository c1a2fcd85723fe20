#include "fairgame/sim.hpp"

#include <cmath>
#include <string>

#include "fairgame/errors.hpp"

namespace fairgame {

namespace {

int sample_row(const std::vector<std::pair<int, double>>& row, Xoshiro256StarStar& rng) {
    if (row.size() == 1) return row[0].first;
    const double u = rng.next_double();
    double cum = 0.0;
    for (size_t i = 0; i + 1 < row.size(); ++i) {
        cum += row[i].second;
        if (u < cum) return row[i].first;
    }
    return row.back().first;
}

int sample_game_row(const GameGraph& game, int v, Xoshiro256StarStar& rng) {
    auto succ = game.successors(v);
    if (succ.size() == 1) return succ[0];
    auto prob = game.probabilities(v);
    const double u = rng.next_double();
    double cum = 0.0;
    for (size_t i = 0; i + 1 < succ.size(); ++i) {
        cum += prob[i];
        if (u < cum) return succ[i];
    }
    return succ.back();
}

}  // namespace

EpisodeResult simulate_episode(const GameGraph& game, const MemorylessPolicy& sigma1,
                               const MemorylessPolicy& sigma2, Xoshiro256StarStar& rng,
                               long step_cap) {
    EpisodeResult result;
    int v = game.initial();
    while (true) {
        if (game.is_terminal(v)) {
            result.terminated = true;
            return result;
        }
        if (result.steps >= step_cap) {
            return result;
        }
        result.total_reward += game.reward(v);
        switch (game.cls(v)) {
            case VertexClass::Prob:
                v = sample_game_row(game, v, rng);
                break;
            case VertexClass::Max:
                if (!sigma1.covers(v)) {
                    throw ValidationError("max strategy does not cover vertex " +
                                          std::to_string(v));
                }
                v = sample_row(sigma1.rows[static_cast<size_t>(v)], rng);
                break;
            case VertexClass::Min:
                if (!sigma2.covers(v)) {
                    throw ValidationError("min strategy does not cover vertex " +
                                          std::to_string(v));
                }
                v = sample_row(sigma2.rows[static_cast<size_t>(v)], rng);
                break;
        }
        ++result.steps;
    }
}

Estimate estimate_value(const GameGraph& game, const MemorylessPolicy& sigma1,
                        const MemorylessPolicy& sigma2, long episodes, uint64_t seed,
                        long step_cap) {
    if (episodes <= 0) {
        throw ValidationError("episode count must be positive");
    }
    if (sigma1.rows.size() != static_cast<size_t>(game.size()) ||
        sigma2.rows.size() != static_cast<size_t>(game.size())) {
        throw ValidationError("strategy rows do not match the game size");
    }

    Estimate est;
    est.episodes = episodes;
    long terminated = 0;
    // Welford accumulation over the terminated episodes, in episode order.
    double mean = 0.0;
    double m2 = 0.0;
    for (long i = 0; i < episodes; ++i) {
        Xoshiro256StarStar rng(seed ^ static_cast<uint64_t>(i));
        const EpisodeResult ep = simulate_episode(game, sigma1, sigma2, rng, step_cap);
        if (!ep.terminated) continue;
        ++terminated;
        const double delta = ep.total_reward - mean;
        mean += delta / static_cast<double>(terminated);
        m2 += delta * (ep.total_reward - mean);
    }
    est.termination_rate = static_cast<double>(terminated) / static_cast<double>(episodes);
    if (terminated > 0) {
        est.mean = mean;
    }
    if (terminated > 1) {
        const double variance = m2 / static_cast<double>(terminated - 1);
        est.standard_error = std::sqrt(variance / static_cast<double>(terminated));
    }
    return est;
}

}  // namespace fairgame
