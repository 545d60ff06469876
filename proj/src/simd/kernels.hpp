#pragma once

#include "rhd/simd.hpp"

namespace rhd::simd::detail {

extern const KernelTable kScalarKernels;
#if defined(RHD_HAVE_AVX2_KERNELS)
extern const KernelTable kAvx2Kernels;
#endif
#if defined(RHD_HAVE_NEON_KERNELS)
extern const KernelTable kNeonKernels;
#endif

}  // namespace rhd::simd::detail
