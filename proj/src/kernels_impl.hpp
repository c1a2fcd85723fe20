#pragma once

// Internal linkage glue between the kernel variants and the runtime selector.
// Not installed; include only from src/.

#include "fairgame/kernels.hpp"

namespace fairgame::detail {

extern const Kernels kScalarKernels;
#if defined(FAIRGAME_BUILD_AVX2)
extern const Kernels kAvx2Kernels;
#endif

}  // namespace fairgame::detail
