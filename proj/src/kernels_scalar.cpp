#include <algorithm>
#include <cmath>

#include "kernels_impl.hpp"

// Reference kernels. The lane-blocked accumulation order is part of the
// contract (see kernels.hpp): element i lands in accumulator i mod 4 via fma,
// and the four accumulators combine as (l0+l1)+(l2+l3). The AVX2 variant
// performs the identical operations four lanes at a time.

namespace fairgame {
namespace {

double row_expected_scalar(const double* f, const int32_t* succ, const double* prob, int len) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < len; ++i) {
        lane[i & 3] = std::fma(prob[i], f[succ[i]], lane[i & 3]);
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double row_best_scalar(const double* f, const int32_t* succ, int len, bool maximize) {
    double best = f[succ[0]];
    if (maximize) {
        for (int i = 1; i < len; ++i) best = std::max(best, f[succ[i]]);
    } else {
        for (int i = 1; i < len; ++i) best = std::min(best, f[succ[i]]);
    }
    return best;
}

void bellman_sweep_scalar(const GameView& g, const double* f, double* out) {
    for (int v = 0; v < g.n; ++v) {
        if (g.terminal[v]) {
            out[v] = 0.0;
            continue;
        }
        const int begin = g.row_begin[v];
        const int len = g.row_begin[v + 1] - begin;
        if (g.cls[v] == static_cast<uint8_t>(VertexClass::Prob)) {
            out[v] = g.reward[v] + row_expected_scalar(f, g.succ + begin, g.prob + begin, len);
        } else {
            const bool maximize = g.cls[v] == static_cast<uint8_t>(VertexClass::Max);
            out[v] = g.reward[v] + row_best_scalar(f, g.succ + begin, len, maximize);
        }
    }
}

double clamp_descend_scalar(double* f, const double* g, int n) {
    double residual = 0.0;
    for (int v = 0; v < n; ++v) {
        const double next = std::min(f[v], g[v]);
        const double rel = (f[v] - next) / std::max(next, 1.0);
        if (rel > residual) residual = rel;
        f[v] = next;
    }
    return residual;
}

}  // namespace

namespace detail {

const Kernels kScalarKernels = {
    "scalar",
    &row_expected_scalar,
    &row_best_scalar,
    &bellman_sweep_scalar,
    &clamp_descend_scalar,
};

}  // namespace detail
}  // namespace fairgame
