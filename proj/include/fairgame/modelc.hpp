#pragma once

#include <string>
#include <vector>

#include "fairgame/game.hpp"
#include "fairgame/modelc_ast.hpp"

namespace fairgame::modelc {

// Explicit-state compilation result. Player vertices carry the variable
// valuation that reached them; the probabilistic vertices introduced for
// multi-branch commands carry their source vertex and command label instead.
struct CompiledGame {
    GameGraph game;
    std::vector<std::string> variable_names;

    struct VpTag {
        int source = -1;
        std::string command_label;
    };

    // All three run over every vertex id; valuations are meaningful where
    // is_player_state is set, vp_tags where it is not.
    std::vector<uint8_t> is_player_state;
    std::vector<std::vector<long long>> valuations;
    std::vector<VpTag> vp_tags;
};

struct CompileOptions {
    bool close_deadlocks = false;    // self-loop deadlocked states (reward must be 0)
    long state_cap = 10'000'000;     // explored player states before giving up
    double row_tolerance = 1e-9;     // per-command probability row sum check
};

// Text to AST. Throws ModelError with line/column on syntax or declaration
// errors (duplicate names, labels owned by both players, malformed tables).
ModelAst parse(const std::string& text);

// Breadth-first exploration from the init valuation into a validated game.
// Deterministic: a given model text always produces identical vertex ids.
CompiledGame compile(const ModelAst& ast, const CompileOptions& options = {});

CompiledGame compile_model(const std::string& text, const CompileOptions& options = {});

}  // namespace fairgame::modelc
