#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fairgame/bitset.hpp"

namespace fairgame {

// Vertex ownership. Max (Player 1) maximizes the accumulated reward, Min
// (Player 2) minimizes it, Prob vertices resolve by their edge distribution.
enum class VertexClass : uint8_t { Max = 0, Min = 1, Prob = 2 };

const char* to_string(VertexClass c);

using ValueVector = std::vector<double>;

// One vertex of a game under construction: class, reward and successor row.
// For Max/Min vertices every row probability must be exactly 1 (the row is an
// edge list); for Prob vertices the row is a distribution.
struct VertexSpec {
    VertexClass cls;
    double reward;
    std::vector<std::pair<int, double>> succ;
};

// Turn-based stochastic game graph in compressed sparse row form. Immutable
// after construction; every analysis in the project shares instances freely
// across threads.
//
// Conventions baked into the representation:
//   - vertex ids are dense, 0-based ints; edge order within a row is the
//     declaration order of the input (ties elsewhere break on smallest id),
//   - a vertex is terminal iff its row is exactly a probability-1 self-loop,
//   - terminal rewards are 0 and all rewards are non-negative and finite.
class GameGraph {
  public:
    // Zero-vertex placeholder, so results that embed a graph can exist before
    // construction fills them in. Every non-empty instance passed validation.
    GameGraph() = default;

    // Builds and validates. Throws ValidationError with a vertex-specific
    // message on any malformed input.
    static GameGraph from_vertices(std::vector<VertexSpec> vertices, int initial);

    int size() const { return n_; }
    int initial() const { return initial_; }

    VertexClass cls(int v) const { return cls_[static_cast<size_t>(v)]; }
    double reward(int v) const { return reward_[static_cast<size_t>(v)]; }
    bool is_terminal(int v) const { return terminal_[static_cast<size_t>(v)] != 0; }

    int row_begin(int v) const { return row_begin_[static_cast<size_t>(v)]; }
    int row_end(int v) const { return row_begin_[static_cast<size_t>(v) + 1]; }
    int out_degree(int v) const { return row_end(v) - row_begin(v); }

    std::span<const int32_t> successors(int v) const {
        return {succ_.data() + row_begin(v), static_cast<size_t>(out_degree(v))};
    }
    std::span<const double> probabilities(int v) const {
        return {prob_.data() + row_begin(v), static_cast<size_t>(out_degree(v))};
    }

    // Raw CSR arrays for the sweep kernels.
    const int32_t* succ_data() const { return succ_.data(); }
    const double* prob_data() const { return prob_.data(); }
    const int32_t* row_begin_data() const { return row_begin_.data(); }
    const double* reward_data() const { return reward_.data(); }
    const uint8_t* cls_data() const {
        return reinterpret_cast<const uint8_t*>(cls_.data());
    }
    const uint8_t* terminal_data() const { return terminal_.data(); }

    int edge_count() const { return static_cast<int>(succ_.size()); }

    VertexSet terminal_set() const;
    int count_class(VertexClass c) const;

    // Reverse adjacency (predecessor lists), built on demand by analyses that
    // need it. Returned as CSR over predecessor ids.
    struct Reverse {
        std::vector<int32_t> row_begin;
        std::vector<int32_t> pred;
    };
    Reverse reverse_edges() const;

  private:
    void validate() const;

    int n_ = 0;
    int initial_ = 0;
    std::vector<VertexClass> cls_;
    std::vector<double> reward_;
    std::vector<int32_t> row_begin_;
    std::vector<int32_t> succ_;
    std::vector<double> prob_;
    std::vector<uint8_t> terminal_;
};

}  // namespace fairgame
