#include "fairgame/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairgame/errors.hpp"
#include "fairgame/scc.hpp"

namespace fairgame {

ValueVector dense_lu_solve(std::vector<double>& a, std::vector<double>& b, int n) {
    const auto at = [&](int i, int j) -> double& {
        return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    };
    constexpr double kPivotFloor = 1e-12;

    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::fabs(at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::fabs(at(i, k));
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best < kPivotFloor) {
            throw SingularSystemError("linear system is singular at elimination step " +
                                      std::to_string(k) +
                                      "; the chain has vertices that never reach a terminal");
        }
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(pivot)]);
        }
        const double inv = 1.0 / at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double factor = at(i, k) * inv;
            if (factor == 0.0) continue;
            at(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
            b[static_cast<size_t>(i)] -= factor * b[static_cast<size_t>(k)];
        }
    }

    ValueVector x(static_cast<size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= at(i, j) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = s / at(i, i);
    }
    return x;
}

namespace {

ValueVector chain_reward_dense(const InducedChain& chain) {
    const int n = chain.size();
    std::vector<double> a(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    std::vector<double> b(static_cast<size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
        const size_t row = static_cast<size_t>(v) * static_cast<size_t>(n);
        a[row + static_cast<size_t>(v)] = 1.0;
        if (chain.is_terminal(v)) continue;
        auto succ = chain.successors(v);
        auto prob = chain.probabilities(v);
        for (size_t i = 0; i < succ.size(); ++i) {
            a[row + static_cast<size_t>(succ[i])] -= prob[i];
        }
        b[static_cast<size_t>(v)] = chain.reward(v);
    }
    return dense_lu_solve(a, b, n);
}

// Large chains are still solved exactly: the condensation of a chain that
// terminates almost surely is a DAG whose components are usually far smaller
// than the chain itself, so eliminating one dense block per component keeps
// the cubic cost local. Results downstream of a component enter its
// right-hand side as already-solved constants. Approximate sweeps are not an
// option here; policy iteration on top of this solve needs exact values to
// terminate.
ValueVector chain_reward_scc_blocks(const InducedChain& chain) {
    const int n = chain.size();
    const SccDecomposition scc = strongly_connected_components(chain);
    const auto groups = scc.members();
    std::vector<int32_t> local(static_cast<size_t>(n), 0);
    for (const auto& members : groups) {
        for (size_t i = 0; i < members.size(); ++i) {
            local[static_cast<size_t>(members[i])] = static_cast<int32_t>(i);
        }
    }

    ValueVector x(static_cast<size_t>(n), 0.0);
    std::vector<double> a;
    std::vector<double> b;
    // Every edge leaving a component points to a lower component id, so
    // ascending order visits a component only after everything it can reach.
    for (int c = 0; c < scc.component_count; ++c) {
        const auto& members = groups[static_cast<size_t>(c)];
        const int m = static_cast<int>(members.size());
        if (m == 1 && chain.is_terminal(members[0])) continue;
        a.assign(static_cast<size_t>(m) * static_cast<size_t>(m), 0.0);
        b.assign(static_cast<size_t>(m), 0.0);
        for (int i = 0; i < m; ++i) {
            const int v = members[static_cast<size_t>(i)];
            const size_t row = static_cast<size_t>(i) * static_cast<size_t>(m);
            a[row + static_cast<size_t>(i)] = 1.0;
            b[static_cast<size_t>(i)] = chain.reward(v);
            auto succ = chain.successors(v);
            auto prob = chain.probabilities(v);
            for (size_t k = 0; k < succ.size(); ++k) {
                const int w = succ[k];
                if (scc.component[static_cast<size_t>(w)] == c) {
                    a[row + static_cast<size_t>(local[static_cast<size_t>(w)])] -= prob[k];
                } else {
                    b[static_cast<size_t>(i)] += prob[k] * x[static_cast<size_t>(w)];
                }
            }
        }
        const ValueVector block = dense_lu_solve(a, b, m);
        for (int i = 0; i < m; ++i) {
            x[static_cast<size_t>(members[static_cast<size_t>(i)])] =
                block[static_cast<size_t>(i)];
        }
    }
    return x;
}

}  // namespace

ValueVector chain_expected_reward(const InducedChain& chain) {
    for (int v = 0; v < chain.size(); ++v) {
        if (chain.cls(v) != VertexClass::Prob && !chain.is_terminal(v)) {
            throw ValidationError("chain has an unresolved player vertex " + std::to_string(v));
        }
    }
    if (chain.size() <= kDenseSolveLimit) {
        return chain_reward_dense(chain);
    }
    return chain_reward_scc_blocks(chain);
}

}  // namespace fairgame
