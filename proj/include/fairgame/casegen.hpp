#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fairgame::casegen {

// Seeded generators for the two benchmark families. Output is model text;
// same config always yields byte-identical text.

enum class RobortaVersion { A, B, C };

// Robot-versus-traffic-light grid: the light (Min) signals a direction, the
// robot (Max) then moves, collecting cell rewards; moving forward past the
// last row ends the game. Version A has a reliable light; in B the green
// signal can fail with probability q; in C both signals can. The robot's own
// moves fail with probability p (it stays put and will re-collect its cell).
struct RobortaConfig {
    int width = 4;
    int length = 4;
    double p = 0.1;                // robot failure probability
    double q = 0.0;                // light failure probability (versions B, C)
    RobortaVersion version = RobortaVersion::A;
    uint64_t seed = 1;
};

// Seed-derived grid data, exposed for tests: movement constraints
// (0 left only, 1 either side, 2 right only) and integer cell rewards.
struct RobortaTables {
    std::vector<std::vector<int>> moves;    // [col][row], width x length
    std::vector<std::vector<int>> rewards;  // [col][row], values in [0,5]
};

RobortaTables derive_roborta_tables(const RobortaConfig& config);

std::string gen_roborta(const RobortaConfig& config);

// Surveillance flight plan: an operator (Min) decides when the drone may
// capture imagery at a waypoint and pilots at checkpoints (unless piloting is
// delegated, probability d); the drone (Max) picks routes otherwise. Every
// flight leg risks losing the drone: probability 1 on dangerous edges, s > 0
// elsewhere, which is what guarantees eventual termination. First capture at
// each waypoint earns that waypoint's reward.
struct UavConfig {
    int waypoints = 6;
    double s = 0.05;               // loss probability on a normal edge
    double d = 0.5;                // delegation probability at checkpoints
    uint64_t seed = 1;
};

struct UavLayout {
    struct Edge {
        int from;
        int to;
        bool dangerous;
    };
    std::vector<Edge> edges;       // undirected, flown in either direction
    std::vector<int> checkpoints;  // waypoints where the operator pilots
    std::vector<int> rewards;      // capture reward per waypoint, in [1,9]
};

UavLayout derive_uav_layout(const UavConfig& config);

std::string gen_uav(const UavConfig& config);

}  // namespace fairgame::casegen
