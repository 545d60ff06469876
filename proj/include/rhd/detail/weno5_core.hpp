#pragma once

// Jiang-Shu fifth-order WENO, left-biased: reconstructs the value at x_{i+1/2}
// from v0..v4 = cells i-2..i+2. The SIMD kernels replicate this exact
// operation order so that every variant is bitwise identical.

namespace rhd::detail {

inline constexpr double kWenoEps = 1e-6;

inline double weno5_left(double v0, double v1, double v2, double v3, double v4) {
  const double c13_12 = 13.0 / 12.0;

  const double t0a = v0 - 2.0 * v1 + v2;
  const double t0b = v0 - 4.0 * v1 + 3.0 * v2;
  const double t1a = v1 - 2.0 * v2 + v3;
  const double t1b = v1 - v3;
  const double t2a = v2 - 2.0 * v3 + v4;
  const double t2b = 3.0 * v2 - 4.0 * v3 + v4;

  const double b0 = c13_12 * (t0a * t0a) + 0.25 * (t0b * t0b);
  const double b1 = c13_12 * (t1a * t1a) + 0.25 * (t1b * t1b);
  const double b2 = c13_12 * (t2a * t2a) + 0.25 * (t2b * t2b);

  const double e0 = kWenoEps + b0;
  const double e1 = kWenoEps + b1;
  const double e2 = kWenoEps + b2;
  const double a0 = 0.1 / (e0 * e0);
  const double a1 = 0.6 / (e1 * e1);
  const double a2 = 0.3 / (e2 * e2);

  const double q0 = (2.0 * v0 - 7.0 * v1 + 11.0 * v2) / 6.0;
  const double q1 = (-v1 + 5.0 * v2 + 2.0 * v3) / 6.0;
  const double q2 = (2.0 * v2 + 5.0 * v3 - v4) / 6.0;

  return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

}  // namespace rhd::detail
