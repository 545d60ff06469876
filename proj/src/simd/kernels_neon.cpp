// AArch64 only; NEON is architecturally guaranteed there.
#include <arm_neon.h>

#include "kernels.hpp"
#include "rhd/detail/weno5_core.hpp"

namespace rhd::simd::detail {

namespace {

inline float64x2_t smooth_term(float64x2_t ta, float64x2_t tb, float64x2_t c13_12,
                               float64x2_t quarter) {
  return vaddq_f64(vmulq_f64(c13_12, vmulq_f64(ta, ta)), vmulq_f64(quarter, vmulq_f64(tb, tb)));
}

void weno5_left_neon(const double* v0p, const double* v1p, const double* v2p,
                     const double* v3p, const double* v4p, double* out, std::size_t n) {
  const float64x2_t two = vdupq_n_f64(2.0);
  const float64x2_t three = vdupq_n_f64(3.0);
  const float64x2_t four = vdupq_n_f64(4.0);
  const float64x2_t five = vdupq_n_f64(5.0);
  const float64x2_t six = vdupq_n_f64(6.0);
  const float64x2_t seven = vdupq_n_f64(7.0);
  const float64x2_t eleven = vdupq_n_f64(11.0);
  const float64x2_t c13_12 = vdupq_n_f64(13.0 / 12.0);
  const float64x2_t quarter = vdupq_n_f64(0.25);
  const float64x2_t eps = vdupq_n_f64(rhd::detail::kWenoEps);
  const float64x2_t d0 = vdupq_n_f64(0.1);
  const float64x2_t d1 = vdupq_n_f64(0.6);
  const float64x2_t d2 = vdupq_n_f64(0.3);

  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t v0 = vld1q_f64(v0p + k);
    const float64x2_t v1 = vld1q_f64(v1p + k);
    const float64x2_t v2 = vld1q_f64(v2p + k);
    const float64x2_t v3 = vld1q_f64(v3p + k);
    const float64x2_t v4 = vld1q_f64(v4p + k);

    const float64x2_t t0a = vaddq_f64(vsubq_f64(v0, vmulq_f64(two, v1)), v2);
    const float64x2_t t0b = vaddq_f64(vsubq_f64(v0, vmulq_f64(four, v1)), vmulq_f64(three, v2));
    const float64x2_t t1a = vaddq_f64(vsubq_f64(v1, vmulq_f64(two, v2)), v3);
    const float64x2_t t1b = vsubq_f64(v1, v3);
    const float64x2_t t2a = vaddq_f64(vsubq_f64(v2, vmulq_f64(two, v3)), v4);
    const float64x2_t t2b = vaddq_f64(vsubq_f64(vmulq_f64(three, v2), vmulq_f64(four, v3)), v4);

    const float64x2_t e0 = vaddq_f64(eps, smooth_term(t0a, t0b, c13_12, quarter));
    const float64x2_t e1 = vaddq_f64(eps, smooth_term(t1a, t1b, c13_12, quarter));
    const float64x2_t e2 = vaddq_f64(eps, smooth_term(t2a, t2b, c13_12, quarter));
    const float64x2_t a0 = vdivq_f64(d0, vmulq_f64(e0, e0));
    const float64x2_t a1 = vdivq_f64(d1, vmulq_f64(e1, e1));
    const float64x2_t a2 = vdivq_f64(d2, vmulq_f64(e2, e2));

    const float64x2_t q0 = vdivq_f64(
        vaddq_f64(vsubq_f64(vmulq_f64(two, v0), vmulq_f64(seven, v1)), vmulq_f64(eleven, v2)),
        six);
    const float64x2_t q1 =
        vdivq_f64(vaddq_f64(vsubq_f64(vmulq_f64(five, v2), v1), vmulq_f64(two, v3)), six);
    const float64x2_t q2 =
        vdivq_f64(vsubq_f64(vaddq_f64(vmulq_f64(two, v2), vmulq_f64(five, v3)), v4), six);

    const float64x2_t num =
        vaddq_f64(vaddq_f64(vmulq_f64(a0, q0), vmulq_f64(a1, q1)), vmulq_f64(a2, q2));
    const float64x2_t den = vaddq_f64(vaddq_f64(a0, a1), a2);
    vst1q_f64(out + k, vdivq_f64(num, den));
  }
  for (; k < n; ++k) out[k] = rhd::detail::weno5_left(v0p[k], v1p[k], v2p[k], v3p[k], v4p[k]);
}

void ssp_combine_neon(double a, const double* x, double b, const double* y, double dt,
                      const double* z, double* out, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  const float64x2_t vb = vdupq_n_f64(b);
  const float64x2_t vdt = vdupq_n_f64(dt);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t inner = vaddq_f64(vld1q_f64(y + k), vmulq_f64(vdt, vld1q_f64(z + k)));
    vst1q_f64(out + k, vaddq_f64(vmulq_f64(va, vld1q_f64(x + k)), vmulq_f64(vb, inner)));
  }
  for (; k < n; ++k) out[k] = a * x[k] + b * (y[k] + dt * z[k]);
}

}  // namespace

const KernelTable kNeonKernels = {weno5_left_neon, ssp_combine_neon};

}  // namespace rhd::simd::detail
