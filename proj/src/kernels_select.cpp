#include "fairgame/errors.hpp"
#include "kernels_impl.hpp"

namespace fairgame {

GameView make_view(const GameGraph& game) {
    GameView view;
    view.n = game.size();
    view.row_begin = game.row_begin_data();
    view.succ = game.succ_data();
    view.prob = game.prob_data();
    view.reward = game.reward_data();
    view.cls = game.cls_data();
    view.terminal = game.terminal_data();
    return view;
}

bool avx2_supported() {
#if defined(FAIRGAME_BUILD_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Kernels& select_kernels(KernelKind kind) {
    switch (kind) {
        case KernelKind::Scalar:
            return detail::kScalarKernels;
        case KernelKind::Avx2:
#if defined(FAIRGAME_BUILD_AVX2)
            if (avx2_supported()) return detail::kAvx2Kernels;
#endif
            throw ValidationError("avx2 kernels requested but not supported on this host");
        case KernelKind::Auto:
        default:
#if defined(FAIRGAME_BUILD_AVX2)
            if (avx2_supported()) return detail::kAvx2Kernels;
#endif
            return detail::kScalarKernels;
    }
}

}  // namespace fairgame
