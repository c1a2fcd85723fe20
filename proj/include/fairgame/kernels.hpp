#pragma once

#include <cstdint>

#include "fairgame/game.hpp"

namespace fairgame {

// Numeric sweep kernels: the arithmetic inner loops of value iteration and
// policy evaluation. Each kernel exists as a scalar reference implementation
// and, on x86-64, an AVX2 variant chosen at runtime.
//
// Both variants implement the exact same arithmetic, not merely the same
// mathematics: row sums accumulate into four lanes (element i goes to lane
// i mod 4, fused multiply-add per element) which are combined at the end as
// (l0+l1)+(l2+l3). The scalar path mirrors this order with std::fma, so
// scalar and AVX2 results are bit-identical and the equivalence tests assert
// exact equality. Output bytes therefore do not depend on the host CPU.

// Borrowed, non-owning view of a game's CSR arrays, in the layout the kernels
// consume. Valid as long as the GameGraph lives.
struct GameView {
    int n = 0;
    const int32_t* row_begin = nullptr;
    const int32_t* succ = nullptr;
    const double* prob = nullptr;
    const double* reward = nullptr;
    const uint8_t* cls = nullptr;      // VertexClass underlying values
    const uint8_t* terminal = nullptr;
};

GameView make_view(const GameGraph& game);

struct Kernels {
    const char* name;

    // Blocked 4-lane fused-multiply-add sum of prob[i] * f[succ[i]].
    double (*row_expected)(const double* f, const int32_t* succ, const double* prob, int len);

    // max (maximize=true) or min over f[succ[i]]; len >= 1.
    double (*row_best)(const double* f, const int32_t* succ, int len, bool maximize);

    // One Bellman sweep: out[v] = 0 at terminals, reward + expectation at
    // Prob vertices, reward + best successor value at player vertices.
    void (*bellman_sweep)(const GameView& g, const double* f, double* out);

    // In place f[v] = min(f[v], g[v]); returns the sweep's relative residual
    // max_v (f_old[v] - f_new[v]) / max(f_new[v], 1).
    double (*clamp_descend)(double* f, const double* g, int n);
};

enum class KernelKind { Auto, Scalar, Avx2 };

// Auto resolves to AVX2 when the build and the CPU support it. Requesting
// Avx2 on an unsupported host throws ValidationError.
const Kernels& select_kernels(KernelKind kind);

bool avx2_supported();

}  // namespace fairgame
