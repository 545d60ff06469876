#pragma once

// Data-parallel kernels with a scalar reference implementation and SIMD
// variants (AVX2 on x86-64, NEON on AArch64) chosen at runtime. All variants
// produce bitwise-identical results.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace rhd::simd {

enum class Level { scalar, avx2, neon };

std::string_view to_string(Level level);

/// Whether `level` is compiled in and supported by the running CPU.
bool supported(Level level);

/// Best supported level; honours RHD_SIMD=scalar|avx2|neon when set.
Level detect();

Level active();

/// Throws std::invalid_argument if `level` is unsupported.
void set_active(Level level);

struct KernelTable {
  // out[n] = weno5_left(v0[n], ..., v4[n])
  void (*weno5_left)(const double* v0, const double* v1, const double* v2, const double* v3,
                     const double* v4, double* out, std::size_t n);
  // out[n] = a * x[n] + b * (y[n] + dt * z[n])
  void (*ssp_combine)(double a, const double* x, double b, const double* y, double dt,
                      const double* z, double* out, std::size_t n);
};

/// Kernels for one specific level (must be supported).
const KernelTable& kernels(Level level);

/// Kernels for the active level.
const KernelTable& kernels();

void weno5_left_batch(std::array<std::span<const double>, 5> stencil, std::span<double> out);

void ssp_combine(double a, std::span<const double> x, double b, std::span<const double> y,
                 double dt, std::span<const double> z, std::span<double> out);

}  // namespace rhd::simd
