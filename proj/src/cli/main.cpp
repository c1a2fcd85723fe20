#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "fairgame/casegen.hpp"
#include "fairgame/errors.hpp"
#include "fairgame/fairness.hpp"
#include "fairgame/game.hpp"
#include "fairgame/json_io.hpp"
#include "fairgame/modelc.hpp"
#include "fairgame/oracle.hpp"
#include "fairgame/sim.hpp"
#include "fairgame/solver.hpp"

namespace {

using namespace fairgame;

// Exit codes, kept stable for scripting:
//   0 success (including a check that answers "not stopping")
//   1 unreadable input, parse or validation failure
//   2 solve refused because the game is not stopping under fairness
//   3 iteration budget exhausted before convergence
//   4 a deliberate size guard tripped (oracle enumeration, state exploration)

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

GameGraph load_game(const std::string& path, bool close_deadlocks) {
    const std::string text = read_input(path);
    if (looks_like_json(text)) return game_from_json(text);
    modelc::CompileOptions options;
    options.close_deadlocks = close_deadlocks;
    return std::move(modelc::compile_model(text, options).game);
}

void emit(const std::string& output_path, std::string content) {
    if (content.empty() || content.back() != '\n') content.push_back('\n');
    if (output_path.empty()) {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + output_path);
    out << content;
}

KernelKind parse_kernel(const std::string& name) {
    if (name == "scalar") return KernelKind::Scalar;
    if (name == "avx2") return KernelKind::Avx2;
    return KernelKind::Auto;
}

int report_not_stopping(const GameGraph& game, const std::string& output_path,
                        const char* detail) {
    emit(output_path, stopping_report_to_json(is_stopping_under_fairness(game)));
    std::cerr << detail << "\n";
    return 2;
}

int do_check(const std::string& input, bool close_deadlocks, const std::string& output_path) {
    const GameGraph game = load_game(input, close_deadlocks);
    emit(output_path, stopping_report_to_json(is_stopping_under_fairness(game)));
    return 0;
}

int do_solve(const std::string& input, bool close_deadlocks, const SolveOptions& options,
             const std::string& output_path) {
    const GameGraph game = load_game(input, close_deadlocks);
    try {
        const Solution solution = solve(game, options);
        emit(output_path, solution_to_json(solution));
        if (!solution.converged) {
            std::cerr << "no convergence within " << options.max_iterations
                      << " iterations (residual " << format_double(solution.residual) << ")\n";
            return 3;
        }
        return 0;
    } catch (const NotStoppingError& e) {
        return report_not_stopping(game, output_path, e.what());
    }
}

int do_simulate(const std::string& input, bool close_deadlocks, const std::string& solution_path,
                long episodes, uint64_t seed, long step_cap, const std::string& output_path) {
    const GameGraph game = load_game(input, close_deadlocks);
    Solution solution;
    if (!solution_path.empty()) {
        solution = solution_from_json(read_input(solution_path), game);
    } else {
        try {
            solution = solve(game);
        } catch (const NotStoppingError& e) {
            return report_not_stopping(game, output_path, e.what());
        }
        if (!solution.converged) {
            std::cerr << "cannot simulate: solve did not converge\n";
            return 3;
        }
    }
    const MemorylessPolicy sigma1 = MemorylessPolicy::from_det(game, solution.sigma1);
    const MemorylessPolicy sigma2 = MemorylessPolicy::from_det(game, solution.sigma2);
    const Estimate estimate = estimate_value(game, sigma1, sigma2, episodes, seed, step_cap);
    emit(output_path, estimate_to_json(estimate));
    return 0;
}

int do_oracle(const std::string& input, bool close_deadlocks, const std::string& output_path) {
    const GameGraph game = load_game(input, close_deadlocks);
    const ValueVector values = oracle_value(game);
    const bool stopping = oracle_stopping(game);
    emit(output_path, oracle_result_to_json(values, stopping));
    return 0;
}

int do_inspect(const std::string& input, bool close_deadlocks, bool as_json,
               const std::string& output_path) {
    const GameGraph game = load_game(input, close_deadlocks);
    const std::vector<int> terminals = game.terminal_set().to_ids();
    std::ostringstream out;
    if (as_json) {
        out << "{\"n\":" << game.size() << ",\"initial\":" << game.initial()
            << ",\"max\":" << game.count_class(VertexClass::Max)
            << ",\"min\":" << game.count_class(VertexClass::Min)
            << ",\"prob\":" << game.count_class(VertexClass::Prob)
            << ",\"edges\":" << game.edge_count() << ",\"terminals\":[";
        for (size_t i = 0; i < terminals.size(); ++i) {
            if (i > 0) out << ",";
            out << terminals[i];
        }
        out << "]}";
    } else {
        out << "vertices: " << game.size() << " (max " << game.count_class(VertexClass::Max)
            << ", min " << game.count_class(VertexClass::Min) << ", prob "
            << game.count_class(VertexClass::Prob) << ")\n";
        out << "edges: " << game.edge_count() << "\n";
        out << "initial: " << game.initial() << "\n";
        out << "terminals (" << terminals.size() << "):";
        for (int t : terminals) out << " " << t;
        out << "\n";
    }
    emit(output_path, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for stochastic games with a fairness-bound minimizer"};
    app.require_subcommand(1);

    std::string input;
    std::string output_path;
    std::string solution_path;
    std::string kernel_name = "auto";
    std::string version_name = "A";
    bool close_deadlocks = false;
    bool as_json = false;
    SolveOptions solve_options;
    long episodes = 100'000;
    long step_cap = kDefaultStepCap;
    uint64_t seed = 1;
    casegen::RobortaConfig roborta;
    casegen::UavConfig uav;

    const auto add_model_arg = [&](CLI::App* cmd) {
        cmd->add_option("model", input, "model file (.fgg or game JSON), or - for stdin")
            ->required();
        cmd->add_flag("--close-deadlocks", close_deadlocks,
                      "turn deadlocked zero-reward states into terminals");
        cmd->add_option("-o,--output", output_path, "write output here instead of stdout");
    };

    CLI::App* check = app.add_subcommand("check", "decide stopping under fairness");
    add_model_arg(check);

    CLI::App* solve_cmd = app.add_subcommand("solve", "compute values and optimal strategies");
    add_model_arg(solve_cmd);
    solve_cmd->add_option("--epsilon", solve_options.epsilon, "relative residual target")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--max-iters", solve_options.max_iterations, "iteration budget")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--margin", solve_options.margin, "upper bound inflation factor")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--kernel", kernel_name, "sweep kernel: auto, scalar, avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo estimate under strategies");
    add_model_arg(simulate);
    simulate->add_option("--solution", solution_path,
                         "solution JSON with the strategies to play (default: solve now)");
    simulate->add_option("--episodes", episodes, "episode count")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "base RNG seed");
    simulate->add_option("--step-cap", step_cap, "steps before an episode is truncated")
        ->check(CLI::PositiveNumber);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact reference answers (small games)");
    add_model_arg(oracle_cmd);

    CLI::App* inspect = app.add_subcommand("inspect", "summarize a game graph");
    add_model_arg(inspect);
    inspect->add_flag("--json", as_json, "machine-readable output");

    CLI::App* gen = app.add_subcommand("gen", "generate a benchmark model");
    gen->require_subcommand(1);
    CLI::App* gen_roborta = gen->add_subcommand("roborta", "robot versus traffic light grid");
    gen_roborta->add_option("--width", roborta.width)->check(CLI::PositiveNumber);
    gen_roborta->add_option("--length", roborta.length)->check(CLI::PositiveNumber);
    gen_roborta->add_option("--p", roborta.p, "robot failure probability");
    gen_roborta->add_option("--q", roborta.q, "light failure probability (versions B, C)");
    gen_roborta->add_option("--version", version_name)->check(CLI::IsMember({"A", "B", "C"}));
    gen_roborta->add_option("--seed", roborta.seed);
    gen_roborta->add_option("-o,--output", output_path, "write output here instead of stdout");
    CLI::App* gen_uav = gen->add_subcommand("uav", "drone surveillance duel");
    gen_uav->add_option("--waypoints", uav.waypoints)->check(CLI::PositiveNumber);
    gen_uav->add_option("--s", uav.s, "loss probability on a normal leg");
    gen_uav->add_option("--d", uav.d, "delegation probability at checkpoints");
    gen_uav->add_option("--seed", uav.seed);
    gen_uav->add_option("-o,--output", output_path, "write output here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*check) return do_check(input, close_deadlocks, output_path);
        if (*solve_cmd) {
            solve_options.kernel = parse_kernel(kernel_name);
            return do_solve(input, close_deadlocks, solve_options, output_path);
        }
        if (*simulate) {
            return do_simulate(input, close_deadlocks, solution_path, episodes, seed, step_cap,
                               output_path);
        }
        if (*oracle_cmd) return do_oracle(input, close_deadlocks, output_path);
        if (*inspect) return do_inspect(input, close_deadlocks, as_json, output_path);
        if (*gen_roborta) {
            roborta.version = version_name == "A"   ? casegen::RobortaVersion::A
                              : version_name == "B" ? casegen::RobortaVersion::B
                                                    : casegen::RobortaVersion::C;
            emit(output_path, casegen::gen_roborta(roborta));
            return 0;
        }
        if (*gen_uav) {
            emit(output_path, casegen::gen_uav(uav));
            return 0;
        }
    } catch (const NotStoppingError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const SizeGuardError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
