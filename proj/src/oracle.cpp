#include "fairgame/oracle.hpp"

#include <algorithm>
#include <string>

#include "fairgame/errors.hpp"
#include "fairgame/linalg.hpp"
#include "fairgame/scc.hpp"

namespace fairgame {

namespace {

const char* player_name(VertexClass owner) {
    return owner == VertexClass::Max ? "max" : "min";
}

// Every bottom SCC of the chain is a singleton terminal. Equivalent to
// almost-sure termination from every vertex: any play eventually settles in
// some bottom SCC, and the only acceptable ones are terminals.
bool chain_terminates(const InducedChain& chain) {
    const SccDecomposition scc = strongly_connected_components(chain);
    const auto groups = scc.members();
    for (int c = 0; c < scc.component_count; ++c) {
        if (!scc.is_bottom[static_cast<size_t>(c)]) continue;
        const auto& members = groups[static_cast<size_t>(c)];
        if (members.size() == 1 && chain.is_terminal(members[0])) continue;
        return false;
    }
    return true;
}

// A choice that stays on a self-edge at a non-terminal vertex parks the play
// there forever. Such strategies get decided without inducing a chain; the
// chain representation could not even express a rewarded absorbing loop.
bool picks_self_loop(const GameGraph& game, const DetMemorylessStrategy& s) {
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) != s.owner || game.is_terminal(v)) continue;
        if (s.choice[static_cast<size_t>(v)] == v) return true;
    }
    return false;
}

}  // namespace

std::vector<DetMemorylessStrategy> enumerate_strategies(const GameGraph& game,
                                                        VertexClass owner) {
    std::vector<int> owned;
    for (int v = 0; v < game.size(); ++v) {
        if (game.cls(v) == owner && !game.is_terminal(v)) owned.push_back(v);
    }
    if (static_cast<int>(owned.size()) > kOracleMaxOwnedPerPlayer) {
        throw SizeGuardError("oracle enumeration limited to " +
                             std::to_string(kOracleMaxOwnedPerPlayer) + " owned vertices, got " +
                             std::to_string(owned.size()) + " for " + player_name(owner));
    }

    std::vector<std::vector<int32_t>> options;
    long total = 1;
    for (int v : owned) {
        auto succ = game.successors(v);
        std::vector<int32_t> ordered(succ.begin(), succ.end());
        std::sort(ordered.begin(), ordered.end());
        total *= static_cast<long>(ordered.size());
        if (total > kOracleMaxStrategiesPerPlayer) {
            throw SizeGuardError("oracle enumeration would need more than " +
                                 std::to_string(kOracleMaxStrategiesPerPlayer) +
                                 " strategies for " + player_name(owner));
        }
        options.push_back(std::move(ordered));
    }

    std::vector<DetMemorylessStrategy> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<size_t> digit(owned.size(), 0);
    while (true) {
        DetMemorylessStrategy s;
        s.owner = owner;
        s.choice.assign(static_cast<size_t>(game.size()), DetMemorylessStrategy::kNone);
        for (size_t i = 0; i < owned.size(); ++i) {
            s.choice[static_cast<size_t>(owned[i])] = options[i][digit[i]];
        }
        out.push_back(std::move(s));
        // Advance the rightmost digit, lexicographic order over
        // (choice at owned[0], choice at owned[1], ...).
        size_t i = owned.size();
        while (i > 0) {
            --i;
            if (++digit[i] < options[i].size()) break;
            digit[i] = 0;
            if (i == 0) return out;
        }
        if (owned.empty()) return out;
    }
}

bool is_fair_det_strategy(const GameGraph& game, const DetMemorylessStrategy& sigma2) {
    // Staying put at a non-terminal Min vertex starves its other successors
    // (every non-terminal vertex has at least one), from that vertex onward.
    if (picks_self_loop(game, sigma2)) return false;
    const std::vector<DetMemorylessStrategy> max_strategies =
        enumerate_strategies(game, VertexClass::Max);
    for (const DetMemorylessStrategy& sigma1 : max_strategies) {
        // A maximizer parked on a self-edge forms a singleton bottom component
        // with no minimizer in it, which witnesses nothing about sigma2; any
        // other witness persists when the parked vertex is rerouted, so the
        // parked-free strategies cover the whole verdict.
        if (picks_self_loop(game, sigma1)) continue;
        const InducedChain chain = induce_chain(game, sigma1, sigma2);
        const SccDecomposition scc = strongly_connected_components(chain);
        const auto groups = scc.members();
        for (int c = 0; c < scc.component_count; ++c) {
            if (!scc.is_bottom[static_cast<size_t>(c)]) continue;
            const auto& members = groups[static_cast<size_t>(c)];
            bool has_terminal = false;
            for (int v : members) {
                if (chain.is_terminal(v)) {
                    has_terminal = true;
                    break;
                }
            }
            if (has_terminal) continue;
            // The play can stay in this component forever, so every Min
            // vertex recurring here must have all its game successors inside.
            for (int v : members) {
                if (game.cls(v) != VertexClass::Min) continue;
                for (int w : game.successors(v)) {
                    if (scc.component[static_cast<size_t>(w)] != c) return false;
                }
            }
        }
    }
    return true;
}

ValueVector oracle_value(const GameGraph& game) {
    const std::vector<DetMemorylessStrategy> max_strategies =
        enumerate_strategies(game, VertexClass::Max);
    std::vector<DetMemorylessStrategy> fair;
    for (const DetMemorylessStrategy& sigma2 : enumerate_strategies(game, VertexClass::Min)) {
        if (is_fair_det_strategy(game, sigma2)) fair.push_back(sigma2);
    }
    if (fair.empty()) {
        throw ValidationError(
            "no fair deterministic Min strategy exists; is the game stopping under fairness?");
    }

    const size_t n = static_cast<size_t>(game.size());
    ValueVector best_max(n, 0.0);
    bool first_max = true;
    for (const DetMemorylessStrategy& sigma1 : max_strategies) {
        if (picks_self_loop(game, sigma1)) {
            throw ValidationError(
                "a (max, fair min) strategy pair fails to terminate almost surely; "
                "the game is not stopping under fairness");
        }
        ValueVector worst_min(n, 0.0);
        bool first_min = true;
        for (const DetMemorylessStrategy& sigma2 : fair) {
            const InducedChain chain = induce_chain(game, sigma1, sigma2);
            if (!chain_terminates(chain)) {
                throw ValidationError(
                    "a (max, fair min) strategy pair fails to terminate almost surely; "
                    "the game is not stopping under fairness");
            }
            const ValueVector x = chain_expected_reward(chain);
            if (first_min) {
                worst_min = x;
                first_min = false;
            } else {
                for (size_t v = 0; v < n; ++v) worst_min[v] = std::min(worst_min[v], x[v]);
            }
        }
        if (first_max) {
            best_max = worst_min;
            first_max = false;
        } else {
            for (size_t v = 0; v < n; ++v) best_max[v] = std::max(best_max[v], worst_min[v]);
        }
    }
    return best_max;
}

bool oracle_stopping(const GameGraph& game) {
    const std::vector<DetMemorylessStrategy> max_strategies =
        enumerate_strategies(game, VertexClass::Max);
    std::vector<DetMemorylessStrategy> fair;
    for (const DetMemorylessStrategy& sigma2 : enumerate_strategies(game, VertexClass::Min)) {
        if (is_fair_det_strategy(game, sigma2)) fair.push_back(sigma2);
    }
    const MemorylessPolicy uniform = uniform_min_strategy(game);

    for (const DetMemorylessStrategy& sigma1 : max_strategies) {
        if (picks_self_loop(game, sigma1)) return false;
        for (const DetMemorylessStrategy& sigma2 : fair) {
            if (!chain_terminates(induce_chain(game, sigma1, sigma2))) return false;
        }
        const InducedChain chain =
            induce_chain(game, MemorylessPolicy::from_det(game, sigma1), uniform);
        if (!chain_terminates(chain)) return false;
    }
    return true;
}

}  // namespace fairgame
