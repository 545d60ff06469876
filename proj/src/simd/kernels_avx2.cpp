// Compiled with -mavx2 only; callers must check CPU support first.
#include <immintrin.h>

#include "kernels.hpp"
#include "rhd/detail/weno5_core.hpp"

namespace rhd::simd::detail {

namespace {

inline __m256d smooth_term(__m256d ta, __m256d tb, __m256d c13_12, __m256d quarter) {
  return _mm256_add_pd(_mm256_mul_pd(c13_12, _mm256_mul_pd(ta, ta)),
                       _mm256_mul_pd(quarter, _mm256_mul_pd(tb, tb)));
}

void weno5_left_avx2(const double* v0p, const double* v1p, const double* v2p,
                     const double* v3p, const double* v4p, double* out, std::size_t n) {
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d five = _mm256_set1_pd(5.0);
  const __m256d six = _mm256_set1_pd(6.0);
  const __m256d seven = _mm256_set1_pd(7.0);
  const __m256d eleven = _mm256_set1_pd(11.0);
  const __m256d c13_12 = _mm256_set1_pd(13.0 / 12.0);
  const __m256d quarter = _mm256_set1_pd(0.25);
  const __m256d eps = _mm256_set1_pd(rhd::detail::kWenoEps);
  const __m256d d0 = _mm256_set1_pd(0.1);
  const __m256d d1 = _mm256_set1_pd(0.6);
  const __m256d d2 = _mm256_set1_pd(0.3);

  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v0 = _mm256_loadu_pd(v0p + k);
    const __m256d v1 = _mm256_loadu_pd(v1p + k);
    const __m256d v2 = _mm256_loadu_pd(v2p + k);
    const __m256d v3 = _mm256_loadu_pd(v3p + k);
    const __m256d v4 = _mm256_loadu_pd(v4p + k);

    const __m256d t0a = _mm256_add_pd(_mm256_sub_pd(v0, _mm256_mul_pd(two, v1)), v2);
    const __m256d t0b =
        _mm256_add_pd(_mm256_sub_pd(v0, _mm256_mul_pd(four, v1)), _mm256_mul_pd(three, v2));
    const __m256d t1a = _mm256_add_pd(_mm256_sub_pd(v1, _mm256_mul_pd(two, v2)), v3);
    const __m256d t1b = _mm256_sub_pd(v1, v3);
    const __m256d t2a = _mm256_add_pd(_mm256_sub_pd(v2, _mm256_mul_pd(two, v3)), v4);
    const __m256d t2b =
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(three, v2), _mm256_mul_pd(four, v3)), v4);

    const __m256d e0 = _mm256_add_pd(eps, smooth_term(t0a, t0b, c13_12, quarter));
    const __m256d e1 = _mm256_add_pd(eps, smooth_term(t1a, t1b, c13_12, quarter));
    const __m256d e2 = _mm256_add_pd(eps, smooth_term(t2a, t2b, c13_12, quarter));
    const __m256d a0 = _mm256_div_pd(d0, _mm256_mul_pd(e0, e0));
    const __m256d a1 = _mm256_div_pd(d1, _mm256_mul_pd(e1, e1));
    const __m256d a2 = _mm256_div_pd(d2, _mm256_mul_pd(e2, e2));

    const __m256d q0 = _mm256_div_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(two, v0), _mm256_mul_pd(seven, v1)),
                      _mm256_mul_pd(eleven, v2)),
        six);
    // (-v1 + 5 v2) == (5 v2 - v1) exactly
    const __m256d q1 = _mm256_div_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(five, v2), v1), _mm256_mul_pd(two, v3)), six);
    const __m256d q2 = _mm256_div_pd(
        _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(two, v2), _mm256_mul_pd(five, v3)), v4), six);

    const __m256d num = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(a0, q0), _mm256_mul_pd(a1, q1)), _mm256_mul_pd(a2, q2));
    const __m256d den = _mm256_add_pd(_mm256_add_pd(a0, a1), a2);
    _mm256_storeu_pd(out + k, _mm256_div_pd(num, den));
  }
  for (; k < n; ++k) out[k] = rhd::detail::weno5_left(v0p[k], v1p[k], v2p[k], v3p[k], v4p[k]);
}

void ssp_combine_avx2(double a, const double* x, double b, const double* y, double dt,
                      const double* z, double* out, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  const __m256d vdt = _mm256_set1_pd(dt);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d inner =
        _mm256_add_pd(_mm256_loadu_pd(y + k), _mm256_mul_pd(vdt, _mm256_loadu_pd(z + k)));
    const __m256d r =
        _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + k)), _mm256_mul_pd(vb, inner));
    _mm256_storeu_pd(out + k, r);
  }
  for (; k < n; ++k) out[k] = a * x[k] + b * (y[k] + dt * z[k]);
}

}  // namespace

const KernelTable kAvx2Kernels = {weno5_left_avx2, ssp_combine_avx2};

}  // namespace rhd::simd::detail
