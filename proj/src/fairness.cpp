#include "fairgame/fairness.hpp"

#include <algorithm>
#include <deque>

#include "fairgame/scc.hpp"
#include "fairgame/strategy.hpp"

namespace fairgame {

VertexSet forall_pre_f(const GameGraph& game, const VertexSet& c) {
    // Both single-step operators are reflexive: the result contains c, so
    // iterating either one converges to the corresponding closure.
    VertexSet out = c;
    for (int v = 0; v < game.size(); ++v) {
        auto succ = game.successors(v);
        if (game.cls(v) == VertexClass::Max) {
            bool all = true;
            for (int w : succ) {
                if (!c.test(w)) {
                    all = false;
                    break;
                }
            }
            if (all) out.set(v);
        } else {
            for (int w : succ) {
                if (c.test(w)) {
                    out.set(v);
                    break;
                }
            }
        }
    }
    return out;
}

VertexSet exists_pre_f(const GameGraph& game, const VertexSet& c) {
    VertexSet out = c;
    for (int v = 0; v < game.size(); ++v) {
        for (int w : game.successors(v)) {
            if (c.test(w)) {
                out.set(v);
                break;
            }
        }
    }
    return out;
}

namespace {

enum class PreKind { Forall, Exists };

// Worklist closure of X = seed ∪ Pre(X). For the universal operator, a Max
// vertex enters only once all its successors are in, tracked by a countdown
// per vertex; Min/Prob vertices (and every vertex under the existential
// operator) enter on the first successor.
VertexSet pre_star(const GameGraph& game, const VertexSet& seed, PreKind kind) {
    const int n = game.size();
    VertexSet x(n);
    std::deque<int> queue;
    auto add = [&](int v) {
        if (!x.test(v)) {
            x.set(v);
            queue.push_back(v);
        }
    };
    for (int v = 0; v < n; ++v) {
        if (seed.test(v)) add(v);
    }

    std::vector<int> pending;
    if (kind == PreKind::Forall) {
        pending.resize(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            if (game.cls(v) == VertexClass::Max) {
                pending[static_cast<size_t>(v)] = game.out_degree(v);
            }
        }
    }

    const auto rev = game.reverse_edges();
    while (!queue.empty()) {
        const int w = queue.front();
        queue.pop_front();
        const int begin = rev.row_begin[static_cast<size_t>(w)];
        const int end = rev.row_begin[static_cast<size_t>(w) + 1];
        for (int i = begin; i < end; ++i) {
            const int v = rev.pred[static_cast<size_t>(i)];
            if (x.test(v)) {
                // Still count the edge so the pending counter stays accurate
                // if v was seeded before all its successors entered.
                if (kind == PreKind::Forall && game.cls(v) == VertexClass::Max) {
                    --pending[static_cast<size_t>(v)];
                }
                continue;
            }
            if (kind == PreKind::Forall && game.cls(v) == VertexClass::Max) {
                if (--pending[static_cast<size_t>(v)] == 0) add(v);
            } else {
                add(v);
            }
        }
    }
    return x;
}

}  // namespace

VertexSet forall_pre_star(const GameGraph& game, const VertexSet& seed) {
    return pre_star(game, seed, PreKind::Forall);
}

VertexSet exists_pre_star(const GameGraph& game, const VertexSet& seed) {
    return pre_star(game, seed, PreKind::Exists);
}

VertexSet almost_sure_vertices(const GameGraph& game) {
    return is_stopping_under_fairness(game).almost_sure;
}

StoppingReport is_stopping_under_fairness(const GameGraph& game) {
    StoppingReport report;
    const VertexSet reach_terminal = forall_pre_star(game, game.terminal_set());
    const VertexSet doomed = reach_terminal.complement();
    report.witness = exists_pre_star(game, doomed);
    report.stopping = report.witness.none();
    report.almost_sure = report.witness.complement();
    if (report.stopping) return report;

    // Inside `doomed`, Max has a way to avoid terminals forever even against
    // fair play. Restricting edges to stay inside the set keeps every vertex
    // alive (Max keeps at least one such successor, Min/Prob keep all), and
    // any bottom SCC of the restriction is a component Max can trap the play
    // in. Report the one containing the smallest vertex id.
    std::vector<uint8_t> mask(static_cast<size_t>(game.edge_count()), 0);
    for (int v = 0; v < game.size(); ++v) {
        if (!doomed.test(v)) continue;
        for (int e = game.row_begin(v); e < game.row_end(v); ++e) {
            if (doomed.test(game.succ_data()[e])) mask[static_cast<size_t>(e)] = 1;
        }
    }
    const SccDecomposition scc = strongly_connected_components(game, &mask);
    int best_comp = -1;
    for (int v = 0; v < game.size(); ++v) {
        if (!doomed.test(v)) continue;
        const int c = scc.component[static_cast<size_t>(v)];
        if (scc.is_bottom[static_cast<size_t>(c)]) {
            best_comp = c;
            break;
        }
    }
    if (best_comp >= 0) {
        for (int v = 0; v < game.size(); ++v) {
            if (doomed.test(v) && scc.component[static_cast<size_t>(v)] == best_comp) {
                report.trapped_component.push_back(v);
            }
        }
    }
    return report;
}

bool check_via_uniform_mdp(const GameGraph& game) {
    const InducedMdp mdp = induce_mdp(game, uniform_min_strategy(game));
    return is_stopping_under_fairness(mdp).stopping;
}

}  // namespace fairgame
