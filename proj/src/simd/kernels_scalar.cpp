#include "kernels.hpp"
#include "rhd/detail/weno5_core.hpp"

namespace rhd::simd::detail {

namespace {

void weno5_left_scalar(const double* v0, const double* v1, const double* v2, const double* v3,
                       const double* v4, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = rhd::detail::weno5_left(v0[k], v1[k], v2[k], v3[k], v4[k]);
  }
}

void ssp_combine_scalar(double a, const double* x, double b, const double* y, double dt,
                        const double* z, double* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a * x[k] + b * (y[k] + dt * z[k]);
}

}  // namespace

const KernelTable kScalarKernels = {weno5_left_scalar, ssp_combine_scalar};

}  // namespace rhd::simd::detail
