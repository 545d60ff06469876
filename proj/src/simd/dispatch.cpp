#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels.hpp"

namespace rhd::simd {

namespace {

std::atomic<Level>& active_level() {
  static std::atomic<Level> level{detect()};
  return level;
}

}  // namespace

std::string_view to_string(Level level) {
  switch (level) {
    case Level::scalar: return "scalar";
    case Level::avx2: return "avx2";
    case Level::neon: return "neon";
  }
  return "unknown";
}

bool supported(Level level) {
  switch (level) {
    case Level::scalar:
      return true;
    case Level::avx2:
#if defined(RHD_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Level::neon:
#if defined(RHD_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Level detect() {
  if (const char* env = std::getenv("RHD_SIMD")) {
    const std::string want(env);
    for (Level l : {Level::scalar, Level::avx2, Level::neon}) {
      if (want == to_string(l) && supported(l)) return l;
    }
  }
  if (supported(Level::avx2)) return Level::avx2;
  if (supported(Level::neon)) return Level::neon;
  return Level::scalar;
}

Level active() { return active_level().load(std::memory_order_relaxed); }

void set_active(Level level) {
  if (!supported(level)) {
    throw std::invalid_argument("SIMD level not supported: " + std::string(to_string(level)));
  }
  active_level().store(level, std::memory_order_relaxed);
}

const KernelTable& kernels(Level level) {
  if (!supported(level)) {
    throw std::invalid_argument("SIMD level not supported: " + std::string(to_string(level)));
  }
  switch (level) {
#if defined(RHD_HAVE_AVX2_KERNELS)
    case Level::avx2: return detail::kAvx2Kernels;
#endif
#if defined(RHD_HAVE_NEON_KERNELS)
    case Level::neon: return detail::kNeonKernels;
#endif
    default: return detail::kScalarKernels;
  }
}

const KernelTable& kernels() { return kernels(active()); }

void weno5_left_batch(std::array<std::span<const double>, 5> stencil, std::span<double> out) {
  for (const auto& s : stencil) {
    if (s.size() != out.size()) throw std::invalid_argument("weno5_left_batch: size mismatch");
  }
  kernels().weno5_left(stencil[0].data(), stencil[1].data(), stencil[2].data(),
                       stencil[3].data(), stencil[4].data(), out.data(), out.size());
}

void ssp_combine(double a, std::span<const double> x, double b, std::span<const double> y,
                 double dt, std::span<const double> z, std::span<double> out) {
  if (x.size() != out.size() || y.size() != out.size() || z.size() != out.size()) {
    throw std::invalid_argument("ssp_combine: size mismatch");
  }
  kernels().ssp_combine(a, x.data(), b, y.data(), dt, z.data(), out.data(), out.size());
}

}  // namespace rhd::simd
