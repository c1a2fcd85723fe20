#if defined(FAIRGAME_BUILD_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

// AVX2 kernel variant. Compiled with -mavx2 -mfma for this translation unit
// only; whether it runs is decided by select_kernels() at runtime.
//
// Equivalence with the scalar reference is bitwise, not approximate: the
// vector loop keeps four accumulators (one per lane), element i of a row goes
// to lane i mod 4, every element enters through a fused multiply-add, and the
// final reduction is (l0+l1)+(l2+l3). Tails shorter than a vector reuse the
// same lane slots through std::fma. See kernels.hpp for the shared contract.

namespace fairgame {
namespace {

double row_expected_avx2(const double* f, const int32_t* succ, const double* prob, int len) {
    alignas(32) double lane[4] = {0.0, 0.0, 0.0, 0.0};
    int i = 0;
    if (len >= 4) {
        __m256d acc = _mm256_setzero_pd();
        for (; i + 4 <= len; i += 4) {
            const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(succ + i));
            const __m256d fv = _mm256_i32gather_pd(f, idx, 8);
            const __m256d pv = _mm256_loadu_pd(prob + i);
            acc = _mm256_fmadd_pd(pv, fv, acc);
        }
        _mm256_store_pd(lane, acc);
    }
    for (; i < len; ++i) {
        lane[i & 3] = std::fma(prob[i], f[succ[i]], lane[i & 3]);
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double row_best_avx2(const double* f, const int32_t* succ, int len, bool maximize) {
    if (len < 4) {
        double best = f[succ[0]];
        if (maximize) {
            for (int i = 1; i < len; ++i) best = std::max(best, f[succ[i]]);
        } else {
            for (int i = 1; i < len; ++i) best = std::min(best, f[succ[i]]);
        }
        return best;
    }
    const double seed =
        maximize ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    __m256d acc = _mm256_set1_pd(seed);
    int i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(succ + i));
        const __m256d fv = _mm256_i32gather_pd(f, idx, 8);
        acc = maximize ? _mm256_max_pd(acc, fv) : _mm256_min_pd(acc, fv);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double best = maximize ? std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]))
                           : std::min(std::min(lane[0], lane[1]), std::min(lane[2], lane[3]));
    for (; i < len; ++i) {
        best = maximize ? std::max(best, f[succ[i]]) : std::min(best, f[succ[i]]);
    }
    return best;
}

void bellman_sweep_avx2(const GameView& g, const double* f, double* out) {
    for (int v = 0; v < g.n; ++v) {
        if (g.terminal[v]) {
            out[v] = 0.0;
            continue;
        }
        const int begin = g.row_begin[v];
        const int len = g.row_begin[v + 1] - begin;
        if (g.cls[v] == static_cast<uint8_t>(VertexClass::Prob)) {
            out[v] = g.reward[v] + row_expected_avx2(f, g.succ + begin, g.prob + begin, len);
        } else {
            const bool maximize = g.cls[v] == static_cast<uint8_t>(VertexClass::Max);
            out[v] = g.reward[v] + row_best_avx2(f, g.succ + begin, len, maximize);
        }
    }
}

double clamp_descend_avx2(double* f, const double* g, int n) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d worst = _mm256_setzero_pd();
    int v = 0;
    for (; v + 4 <= n; v += 4) {
        const __m256d fv = _mm256_loadu_pd(f + v);
        const __m256d gv = _mm256_loadu_pd(g + v);
        const __m256d next = _mm256_min_pd(fv, gv);
        const __m256d rel = _mm256_div_pd(_mm256_sub_pd(fv, next), _mm256_max_pd(next, one));
        worst = _mm256_max_pd(worst, rel);
        _mm256_storeu_pd(f + v, next);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, worst);
    double residual = std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
    for (; v < n; ++v) {
        const double next = std::min(f[v], g[v]);
        const double rel = (f[v] - next) / std::max(next, 1.0);
        if (rel > residual) residual = rel;
        f[v] = next;
    }
    return residual;
}

}  // namespace

namespace detail {

const Kernels kAvx2Kernels = {
    "avx2",
    &row_expected_avx2,
    &row_best_avx2,
    &bellman_sweep_avx2,
    &clamp_descend_avx2,
};

}  // namespace detail
}  // namespace fairgame

#endif  // FAIRGAME_BUILD_AVX2
