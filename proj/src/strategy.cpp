#include "fairgame/strategy.hpp"

#include <algorithm>
#include <string>

#include "fairgame/errors.hpp"

namespace fairgame {

namespace {

bool is_successor(const GameGraph& game, int v, int w) {
    auto succ = game.successors(v);
    return std::find(succ.begin(), succ.end(), w) != succ.end();
}

void check_row(const GameGraph& game, int v, const std::vector<std::pair<int, double>>& row,
               const char* who) {
    if (row.empty()) {
        throw ValidationError(std::string(who) + " strategy does not cover vertex " +
                              std::to_string(v));
    }
    for (size_t i = 0; i < row.size(); ++i) {
        const auto& [w, p] = row[i];
        if (!is_successor(game, v, w)) {
            throw ValidationError(std::string(who) + " strategy at vertex " + std::to_string(v) +
                                  " picks " + std::to_string(w) + ", which is not a successor");
        }
        if (!(p > 0.0)) {
            throw ValidationError(std::string(who) + " strategy at vertex " + std::to_string(v) +
                                  " assigns non-positive probability to " + std::to_string(w));
        }
        for (size_t j = i + 1; j < row.size(); ++j) {
            if (row[j].first == w) {
                throw ValidationError(std::string(who) + " strategy at vertex " +
                                      std::to_string(v) + " lists successor " + std::to_string(w) +
                                      " twice");
            }
        }
    }
}

// Rebuilds the vertex list with every non-terminal vertex owned by `owner`
// replaced by a Prob vertex carrying the policy row. Reward and all other
// vertices stay untouched.
std::vector<VertexSpec> resolve_owner(const GameGraph& game, const MemorylessPolicy& policy,
                                      VertexClass owner, const char* who) {
    if (policy.rows.size() != static_cast<size_t>(game.size())) {
        throw ValidationError(std::string(who) + " strategy rows do not match the game size");
    }
    std::vector<VertexSpec> specs(static_cast<size_t>(game.size()));
    for (int v = 0; v < game.size(); ++v) {
        VertexSpec& spec = specs[static_cast<size_t>(v)];
        spec.reward = game.reward(v);
        auto succ = game.successors(v);
        auto prob = game.probabilities(v);
        if (game.cls(v) == owner && !game.is_terminal(v)) {
            const auto& row = policy.rows[static_cast<size_t>(v)];
            check_row(game, v, row, who);
            spec.cls = VertexClass::Prob;
            spec.succ = row;
        } else {
            spec.cls = game.cls(v);
            spec.succ.reserve(succ.size());
            for (size_t i = 0; i < succ.size(); ++i) {
                spec.succ.emplace_back(succ[i], prob[i]);
            }
        }
    }
    return specs;
}

}  // namespace

MemorylessPolicy MemorylessPolicy::from_det(const GameGraph& game,
                                            const DetMemorylessStrategy& s) {
    MemorylessPolicy policy;
    policy.owner = s.owner;
    policy.rows.resize(static_cast<size_t>(game.size()));
    if (static_cast<int>(s.choice.size()) != game.size()) {
        throw ValidationError("strategy choice vector does not match the game size");
    }
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) == s.owner && !game.is_terminal(v)) {
            if (!s.covers(v)) {
                throw ValidationError("strategy does not cover vertex " + std::to_string(v));
            }
            policy.rows[static_cast<size_t>(v)] = {{s.at(v), 1.0}};
        }
    }
    return policy;
}

MemorylessPolicy uniform_min_strategy(const GameGraph& game) {
    MemorylessPolicy policy;
    policy.owner = VertexClass::Min;
    policy.rows.resize(static_cast<size_t>(game.size()));
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) != VertexClass::Min || game.is_terminal(v)) continue;
        auto succ = game.successors(v);
        const double p = 1.0 / static_cast<double>(succ.size());
        auto& row = policy.rows[static_cast<size_t>(v)];
        row.reserve(succ.size());
        for (int w : succ) row.emplace_back(w, p);
    }
    return policy;
}

InducedMdp induce_mdp(const GameGraph& game, const MemorylessPolicy& sigma2) {
    if (sigma2.owner != VertexClass::Min) {
        throw ValidationError("induce_mdp expects a Min strategy");
    }
    auto specs = resolve_owner(game, sigma2, VertexClass::Min, "min");
    return GameGraph::from_vertices(specs, game.initial());
}

InducedMdp induce_mdp(const GameGraph& game, const DetMemorylessStrategy& sigma2) {
    return induce_mdp(game, MemorylessPolicy::from_det(game, sigma2));
}

InducedChain induce_chain(const GameGraph& game, const MemorylessPolicy& sigma1,
                          const MemorylessPolicy& sigma2) {
    if (sigma1.owner != VertexClass::Max || sigma2.owner != VertexClass::Min) {
        throw ValidationError("induce_chain expects a Max strategy and a Min strategy");
    }
    bool has_min = false;
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) == VertexClass::Min && !game.is_terminal(v)) {
            has_min = true;
            break;
        }
    }
    auto specs = resolve_owner(game, sigma1, VertexClass::Max, "max");
    if (has_min) {
        GameGraph half = GameGraph::from_vertices(specs, game.initial());
        specs = resolve_owner(half, sigma2, VertexClass::Min, "min");
    }
    return GameGraph::from_vertices(specs, game.initial());
}

InducedChain induce_chain(const GameGraph& game, const DetMemorylessStrategy& sigma1,
                          const DetMemorylessStrategy& sigma2) {
    MemorylessPolicy p1 = MemorylessPolicy::from_det(game, sigma1);
    MemorylessPolicy p2;
    p2.owner = VertexClass::Min;
    p2.rows.resize(static_cast<size_t>(game.size()));
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) == VertexClass::Min && !game.is_terminal(v) && sigma2.covers(v)) {
            p2.rows[static_cast<size_t>(v)] = {{sigma2.at(v), 1.0}};
        }
    }
    return induce_chain(game, p1, p2);
}

}  // namespace fairgame
