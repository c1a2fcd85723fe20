// Micro benchmark for the Bellman sweep kernels. Builds a seeded random
// stopping game, runs repeated sweeps with the scalar and the auto-selected
// kernels, reports sweep times and verifies the outputs are bit-identical.
//
// Usage: kernel_bench [vertices] [degree] [repetitions]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <vector>

#include "fairgame/game.hpp"
#include "fairgame/kernels.hpp"
#include "fairgame/sim.hpp"

using namespace fairgame;

namespace {

GameGraph build_game(int n, int degree, uint64_t seed) {
    SplitMix64 sm(seed);
    std::vector<VertexSpec> specs(static_cast<size_t>(n));
    const int terminal = n - 1;
    for (int v = 0; v < n; ++v) {
        VertexSpec& spec = specs[static_cast<size_t>(v)];
        if (v == terminal) {
            spec.cls = VertexClass::Prob;
            spec.reward = 0.0;
            spec.succ = {{terminal, 1.0}};
            continue;
        }
        spec.reward = static_cast<double>(sm.next() % 4);
        const uint64_t kind = sm.next() % 4;
        if (kind == 0 || kind == 1) {
            spec.cls = VertexClass::Prob;
            std::vector<double> weights;
            std::vector<int> targets;
            targets.push_back(terminal);
            weights.push_back(1.0 + static_cast<double>(sm.next() % 8));
            for (int k = 1; k < degree; ++k) {
                int w = static_cast<int>(sm.next() % static_cast<uint64_t>(n));
                bool dup = false;
                for (int t : targets) dup = dup || t == w;
                if (dup) continue;
                targets.push_back(w);
                weights.push_back(1.0 + static_cast<double>(sm.next() % 8));
            }
            double total = 0.0;
            for (double w : weights) total += w;
            for (size_t i = 0; i < targets.size(); ++i) {
                spec.succ.push_back({targets[i], weights[i] / total});
            }
        } else {
            spec.cls = kind == 2 ? VertexClass::Max : VertexClass::Min;
            spec.succ.push_back({terminal, 1.0});
            for (int k = 1; k < degree; ++k) {
                int w = static_cast<int>(sm.next() % static_cast<uint64_t>(n));
                bool dup = false;
                for (const auto& [t, p] : spec.succ) dup = dup || t == w;
                if (!dup) spec.succ.push_back({w, 1.0});
            }
        }
    }
    return GameGraph::from_vertices(specs, 0);
}

double time_sweeps(const Kernels& kern, const GameView& view, std::vector<double>& f,
                   std::vector<double>& out, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) {
        kern.bellman_sweep(view, f.data(), out.data());
        kern.clamp_descend(f.data(), out.data(), view.n);
    }
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() /
           static_cast<double>(reps);
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 100'000;
    const int degree = argc > 2 ? std::atoi(argv[2]) : 8;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 50;
    if (n < 2 || degree < 1 || reps < 1) {
        std::cerr << "usage: kernel_bench [vertices>=2] [degree>=1] [repetitions>=1]\n";
        return 1;
    }

    const GameGraph game = build_game(n, degree, 12345);
    const GameView view = make_view(game);
    std::cout << "game: " << game.size() << " vertices, " << game.edge_count() << " edges\n";

    std::vector<double> init(static_cast<size_t>(n), 100.0);
    const Kernels& scalar = select_kernels(KernelKind::Scalar);
    const Kernels& fast = select_kernels(KernelKind::Auto);

    std::vector<double> f_scalar = init;
    std::vector<double> f_fast = init;
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    const double ms_scalar = time_sweeps(scalar, view, f_scalar, out, reps);
    std::vector<double> out2(static_cast<size_t>(n), 0.0);
    const double ms_fast = time_sweeps(fast, view, f_fast, out2, reps);

    std::cout << scalar.name << ": " << ms_scalar << " ms/sweep\n";
    std::cout << fast.name << ": " << ms_fast << " ms/sweep";
    if (std::strcmp(fast.name, scalar.name) != 0) {
        std::cout << "  (x" << ms_scalar / ms_fast << ")";
    }
    std::cout << "\n";

    if (std::memcmp(f_scalar.data(), f_fast.data(), sizeof(double) * f_scalar.size()) != 0) {
        std::cout << "MISMATCH: kernel outputs differ\n";
        return 1;
    }
    std::cout << "outputs bit-identical\n";
    return 0;
}
