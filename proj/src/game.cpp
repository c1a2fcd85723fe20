#include "fairgame/game.hpp"

#include <cmath>
#include <unordered_set>

#include "fairgame/errors.hpp"

namespace fairgame {

namespace {

constexpr double kRowSumTolerance = 1e-9;

std::string vertex_label(int v) { return "vertex " + std::to_string(v); }

}  // namespace

const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Max: return "max";
        case VertexClass::Min: return "min";
        case VertexClass::Prob: return "prob";
    }
    return "?";
}

GameGraph GameGraph::from_vertices(std::vector<VertexSpec> vertices, int initial) {
    GameGraph g;
    g.n_ = static_cast<int>(vertices.size());
    g.initial_ = initial;
    g.cls_.reserve(vertices.size());
    g.reward_.reserve(vertices.size());
    g.row_begin_.reserve(vertices.size() + 1);
    g.row_begin_.push_back(0);
    for (const VertexSpec& spec : vertices) {
        g.cls_.push_back(spec.cls);
        g.reward_.push_back(spec.reward);
        for (const auto& [target, p] : spec.succ) {
            g.succ_.push_back(target);
            g.prob_.push_back(p);
        }
        g.row_begin_.push_back(static_cast<int32_t>(g.succ_.size()));
    }
    g.terminal_.assign(vertices.size(), 0);
    for (int v = 0; v < g.n_; ++v) {
        g.terminal_[static_cast<size_t>(v)] =
            g.out_degree(v) == 1 && g.successors(v)[0] == v && g.probabilities(v)[0] == 1.0;
    }
    g.validate();
    return g;
}

void GameGraph::validate() const {
    if (n_ <= 0) throw ValidationError("game has no vertices");
    if (initial_ < 0 || initial_ >= n_) {
        throw ValidationError("initial vertex " + std::to_string(initial_) + " out of range");
    }
    std::unordered_set<int32_t> seen;
    for (int v = 0; v < n_; ++v) {
        if (out_degree(v) == 0) {
            throw ValidationError(vertex_label(v) + " has no successors");
        }
        double r = reward(v);
        if (!std::isfinite(r) || r < 0) {
            throw ValidationError(vertex_label(v) + " has invalid reward");
        }
        seen.clear();
        double sum = 0.0;
        for (int e = row_begin(v); e < row_end(v); ++e) {
            int32_t w = succ_[static_cast<size_t>(e)];
            double p = prob_[static_cast<size_t>(e)];
            if (w < 0 || w >= n_) {
                throw ValidationError(vertex_label(v) + " has successor " + std::to_string(w) +
                                      " out of range");
            }
            if (!seen.insert(w).second) {
                throw ValidationError(vertex_label(v) + " lists successor " + std::to_string(w) +
                                      " twice");
            }
            if (!std::isfinite(p) || p <= 0.0 || p > 1.0) {
                throw ValidationError(vertex_label(v) + " has edge probability outside (0,1]");
            }
            if (cls(v) != VertexClass::Prob && p != 1.0) {
                throw ValidationError(vertex_label(v) + " is a player vertex with probability " +
                                      std::to_string(p) + " on an edge; player edges must be 1");
            }
            sum += p;
        }
        if (cls(v) == VertexClass::Prob && std::abs(sum - 1.0) > kRowSumTolerance) {
            throw ValidationError(vertex_label(v) + " distribution sums to " +
                                  std::to_string(sum) + ", not 1");
        }
        if (is_terminal(v) && reward(v) != 0.0) {
            throw ValidationError(vertex_label(v) + " is terminal but has reward " +
                                  std::to_string(reward(v)));
        }
    }
}

VertexSet GameGraph::terminal_set() const {
    VertexSet t(n_);
    for (int v = 0; v < n_; ++v) {
        if (is_terminal(v)) t.set(v);
    }
    return t;
}

int GameGraph::count_class(VertexClass c) const {
    int k = 0;
    for (int v = 0; v < n_; ++v) {
        if (cls(v) == c) ++k;
    }
    return k;
}

GameGraph::Reverse GameGraph::reverse_edges() const {
    Reverse rev;
    rev.row_begin.assign(static_cast<size_t>(n_) + 1, 0);
    for (int32_t w : succ_) rev.row_begin[static_cast<size_t>(w) + 1]++;
    for (int v = 0; v < n_; ++v) rev.row_begin[static_cast<size_t>(v) + 1] += rev.row_begin[static_cast<size_t>(v)];
    rev.pred.resize(succ_.size());
    std::vector<int32_t> cursor(rev.row_begin.begin(), rev.row_begin.end() - 1);
    for (int v = 0; v < n_; ++v) {
        for (int e = row_begin(v); e < row_end(v); ++e) {
            int32_t w = succ_[static_cast<size_t>(e)];
            rev.pred[static_cast<size_t>(cursor[static_cast<size_t>(w)]++)] = v;
        }
    }
    return rev;
}

}  // namespace fairgame
