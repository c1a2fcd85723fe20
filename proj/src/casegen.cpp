#include "fairgame/casegen.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "fairgame/errors.hpp"
#include "fairgame/sim.hpp"

namespace fairgame::casegen {

namespace {

// Shortest decimal form that parses back to the same double, so generated
// text stays compact without losing determinism.
std::string fmt(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void append_table(std::ostringstream& out, const std::string& name,
                  const std::vector<std::vector<int>>& rows) {
    out << "const int[][] " << name << " = [\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        out << "  [";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0) out << ", ";
            out << rows[i][j];
        }
        out << "]" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "];\n";
}

void append_label_list(std::ostringstream& out, const std::string& player,
                       const std::vector<std::string>& labels) {
    out << player << " [";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out << (i % 8 == 0 ? ",\n         " : ", ");
        out << labels[i];
    }
    out << "];\n";
}

void validate_roborta(const RobortaConfig& config) {
    if (config.width < 1 || config.length < 1) {
        throw ValidationError("roborta grid dimensions must be at least 1x1");
    }
    if (!(config.p >= 0.0 && config.p < 1.0)) {
        throw ValidationError("robot failure probability must lie in [0, 1)");
    }
    if (!(config.q >= 0.0 && config.q < 1.0)) {
        throw ValidationError("light failure probability must lie in [0, 1)");
    }
}

void validate_uav(const UavConfig& config) {
    if (config.waypoints < 3) {
        throw ValidationError("uav route needs at least 3 waypoints");
    }
    if (!(config.s > 0.0 && config.s <= 1.0)) {
        throw ValidationError("uav loss probability must lie in (0, 1]");
    }
    if (!(config.d >= 0.0 && config.d <= 1.0)) {
        throw ValidationError("delegation probability must lie in [0, 1]");
    }
}

}  // namespace

RobortaTables derive_roborta_tables(const RobortaConfig& config) {
    validate_roborta(config);
    SplitMix64 sm(config.seed);
    RobortaTables tables;
    tables.moves.assign(static_cast<size_t>(config.width),
                        std::vector<int>(static_cast<size_t>(config.length), 0));
    tables.rewards = tables.moves;
    for (auto& column : tables.moves) {
        for (auto& cell : column) {
            // Sideways freedom dominates how much of each row stays reachable,
            // so one-sided cells are kept rare (one in eight per side) instead
            // of drawing the three codes uniformly. Uniform draws wall off
            // most columns on large grids and shrink the state space to a
            // corridor.
            const std::uint64_t draw = sm.next() % 8;
            cell = draw == 0 ? 0 : (draw == 7 ? 2 : 1);
        }
    }
    for (auto& column : tables.rewards) {
        for (auto& cell : column) cell = static_cast<int>(sm.next() % 6);
    }
    return tables;
}

std::string gen_roborta(const RobortaConfig& config) {
    validate_roborta(config);
    const RobortaTables tables = derive_roborta_tables(config);
    const bool yellow_fails = config.version == RobortaVersion::C;
    const bool green_fails = config.version != RobortaVersion::A;

    std::ostringstream out;
    out << "// Grid duel between a sideways-or-forward robot and a traffic light.\n";
    out << "// " << config.width << "x" << config.length << ", version "
        << (config.version == RobortaVersion::A
                ? "A"
                : config.version == RobortaVersion::B ? "B" : "C")
        << ", seed " << config.seed << ".\n";
    out << "// MOVES: 0 left only, 1 either side, 2 right only. Light 0 is the\n";
    out << "// light's turn; 1 yellow (sideways), 2 green (forward), 3 off (any).\n";
    out << "const int WIDTH = " << config.width << ";\n";
    out << "const int LENGTH = " << config.length << ";\n";
    out << "const double P = " << fmt(config.p) << ";\n";
    if (yellow_fails || green_fails) {
        out << "const double Q = " << fmt(config.q) << ";\n";
    }
    append_table(out, "MOVES", tables.moves);
    append_table(out, "REW", tables.rewards);
    out << "player1 [r_l, r_r, r_f];\n";
    out << "player2 [l_y, l_g, l_e];\n";
    out << "module roborta\n";
    out << "  col : [0..WIDTH-1] init 0;\n";
    out << "  row : [0..LENGTH] init 0;\n";
    out << "  light : [0..3] init 0;\n";
    if (yellow_fails) {
        out << "  [l_y] (light=0) & (row<LENGTH) -> (1-Q) : (light'=1) + Q : (light'=3);\n";
    } else {
        out << "  [l_y] (light=0) & (row<LENGTH) -> 1 : (light'=1);\n";
    }
    if (green_fails) {
        out << "  [l_g] (light=0) & (row<LENGTH) -> (1-Q) : (light'=2) + Q : (light'=3);\n";
    } else {
        out << "  [l_g] (light=0) & (row<LENGTH) -> 1 : (light'=2);\n";
    }
    out << "  [l_e] (row=LENGTH) -> 1 : true;\n";
    out << "  [r_l] ((light=1) | (light=3)) & (MOVES[col][row] <= 1) -> "
           "(1-P) : (light'=0) & (col'=(col-1)%WIDTH) + P : (light'=0);\n";
    out << "  [r_r] ((light=1) | (light=3)) & (MOVES[col][row] >= 1) -> "
           "(1-P) : (light'=0) & (col'=(col+1)%WIDTH) + P : (light'=0);\n";
    out << "  [r_f] ((light=2) | (light=3)) & (row<LENGTH) -> "
           "(1-P) : (light'=0) & (row'=row+1) + P : (light'=0);\n";
    out << "endmodule\n";
    out << "rewards\n";
    out << "  (light>=1) : REW[col][row];\n";
    out << "endrewards\n";
    return out.str();
}

UavLayout derive_uav_layout(const UavConfig& config) {
    validate_uav(config);
    const int n = config.waypoints;
    SplitMix64 sm(config.seed);
    UavLayout layout;
    layout.rewards.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        layout.rewards.push_back(1 + static_cast<int>(sm.next() % 9));
    }
    // Waypoint 0 stays checkpoint-free so the drone always pilots the first
    // leg; that keeps the value strictly sensitive to the loss probability.
    for (int i = 1; i < n; ++i) {
        if (sm.next() % 3 == 0) layout.checkpoints.push_back(i);
    }
    if (layout.checkpoints.empty()) layout.checkpoints.push_back(1);

    // The ring is flyable in both directions and never dangerous, so the
    // route stays connected and the drone always has a survivable leg.
    for (int i = 0; i < n; ++i) {
        layout.edges.push_back({i, (i + 1) % n, false});
    }
    auto have_edge = [&layout](int a, int b) {
        for (const auto& e : layout.edges) {
            if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) return true;
        }
        return false;
    };
    const int chords = n / 2;
    for (int k = 0; k < chords; ++k) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            const int a = static_cast<int>(sm.next() % static_cast<uint64_t>(n));
            const int b = static_cast<int>(sm.next() % static_cast<uint64_t>(n));
            if (a == b || have_edge(a, b)) continue;
            layout.edges.push_back({a, b, sm.next() % 2 == 0});
            break;
        }
    }
    return layout;
}

std::string gen_uav(const UavConfig& config) {
    validate_uav(config);
    const UavLayout layout = derive_uav_layout(config);
    const int n = config.waypoints;

    std::vector<bool> is_checkpoint(static_cast<size_t>(n), false);
    for (int c : layout.checkpoints) is_checkpoint[static_cast<size_t>(c)] = true;

    // Directed legs, grouped by source waypoint in ascending order.
    struct Leg {
        int from;
        int to;
        bool dangerous;
    };
    std::vector<Leg> legs;
    for (int from = 0; from < n; ++from) {
        for (const auto& e : layout.edges) {
            if (e.from == from) legs.push_back({from, e.to, e.dangerous});
            if (e.to == from) legs.push_back({from, e.from, e.dangerous});
        }
    }

    std::vector<std::string> p1_labels;
    std::vector<std::string> p2_labels;
    for (int i = 0; i < n; ++i) {
        p2_labels.push_back("o_c" + std::to_string(i));
        p2_labels.push_back("o_g" + std::to_string(i));
    }
    p2_labels.push_back("o_w");
    for (int c : layout.checkpoints) p2_labels.push_back("o_h" + std::to_string(c));
    for (const auto& leg : legs) {
        const std::string suffix = std::to_string(leg.from) + "_" + std::to_string(leg.to);
        p1_labels.push_back("u_f" + suffix);
        if (is_checkpoint[static_cast<size_t>(leg.from)]) {
            p2_labels.push_back("o_f" + suffix);
        }
    }
    p2_labels.push_back("o_e");

    std::ostringstream out;
    out << "// Surveillance duel between a drone and its operator.\n";
    out << "// " << n << " waypoints, s=" << fmt(config.s) << ", d=" << fmt(config.d)
        << ", seed " << config.seed << ".\n";
    out << "// Legs (! marks a certain-loss leg):";
    for (const auto& e : layout.edges) {
        out << " " << e.from << "-" << e.to << (e.dangerous ? "!" : "");
    }
    out << "\n// Checkpoints:";
    for (int c : layout.checkpoints) out << " " << c;
    out << "\n";
    out << "const double S = " << fmt(config.s) << ";\n";
    out << "const double D = " << fmt(config.d) << ";\n";
    append_table(out, "RW", {layout.rewards});
    append_label_list(out, "player1", p1_labels);
    append_label_list(out, "player2", p2_labels);
    out << "module uav\n";
    out << "  loc : [0.." << (n - 1) << "] init 0;\n";
    out << "  // phase 0: sensor turn at a waypoint; 1: route choice pending;\n";
    out << "  // 2: drone pilots (delegated); 3: operator pilots; 4: drone down.\n";
    out << "  phase : [0..4] init 0;\n";
    out << "  justcap : [0..1] init 0;\n";
    for (int i = 0; i < n; ++i) {
        out << "  v" << i << " : [0..1] init 0;\n";
    }
    for (int i = 0; i < n; ++i) {
        out << "  [o_c" << i << "] (phase=0) & (loc=" << i << ") & (v" << i
            << "=0) -> 1 : (v" << i << "'=1) & (justcap'=1) & (phase'=1);\n";
    }
    for (int i = 0; i < n; ++i) {
        out << "  [o_g" << i << "] (phase=0) & (loc=" << i << ") & (v" << i
            << "=1) -> 1 : (phase'=1);\n";
    }
    out << "  [o_w] (phase=0) -> 1 : true;\n";
    for (int c : layout.checkpoints) {
        out << "  [o_h" << c << "] (phase=1) & (loc=" << c
            << ") -> D : (phase'=2) & (justcap'=0) + (1-D) : (phase'=3) & (justcap'=0);\n";
    }
    auto flight = [](bool dangerous, int to) {
        if (dangerous) return std::string("1 : (phase'=4) & (justcap'=0)");
        return "(1-S) : (loc'=" + std::to_string(to) +
               ") & (phase'=0) & (justcap'=0) + S : (phase'=4) & (justcap'=0)";
    };
    for (const auto& leg : legs) {
        const std::string suffix = std::to_string(leg.from) + "_" + std::to_string(leg.to);
        const bool chk = is_checkpoint[static_cast<size_t>(leg.from)];
        out << "  [u_f" << suffix << "] (phase=" << (chk ? 2 : 1) << ") & (loc="
            << leg.from << ") -> " << flight(leg.dangerous, leg.to) << ";\n";
        if (chk) {
            out << "  [o_f" << suffix << "] (phase=3) & (loc=" << leg.from
                << ") -> " << flight(leg.dangerous, leg.to) << ";\n";
        }
    }
    out << "  [o_e] (phase=4) -> 1 : true;\n";
    out << "endmodule\n";
    out << "rewards\n";
    out << "  (justcap=1) : RW[0][loc];\n";
    out << "endrewards\n";
    return out.str();
}

}  // namespace fairgame::casegen
