#include "blink/error.hpp"
#include "blink/simd.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace blink::simd {
namespace {

bool cpu_supports(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(BLINK_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(BLINK_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend pick_default() {
  if (const char* env = std::getenv("BLINK_SIMD")) {
    const std::string want(env);
    for (Backend b : available_backends())
      if (backend_name(b) == want) return b;
  }
  const auto all = available_backends();
  return all.back();
}

std::atomic<int>& active_slot() {
  static std::atomic<int> slot{static_cast<int>(pick_default())};
  return slot;
}

}  // namespace

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::kScalar};
  if (cpu_supports(Backend::kAvx2)) out.push_back(Backend::kAvx2);
  if (cpu_supports(Backend::kNeon)) out.push_back(Backend::kNeon);
  return out;
}

const KernelTable& kernels_for(Backend backend) {
  if (!cpu_supports(backend))
    throw Error(ErrorCode::kInvalidArgument, "SIMD backend unavailable: " + std::string(backend_name(backend)));
  switch (backend) {
#if defined(BLINK_HAVE_AVX2)
    case Backend::kAvx2:
      return avx2_kernels();
#endif
#if defined(BLINK_HAVE_NEON)
    case Backend::kNeon:
      return neon_kernels();
#endif
    default:
      return scalar_kernels();
  }
}

Backend active_backend() { return static_cast<Backend>(active_slot().load(std::memory_order_relaxed)); }

void set_active_backend(Backend backend) {
  kernels_for(backend);
  active_slot().store(static_cast<int>(backend), std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

namespace {
const KernelTable& active() { return kernels_for(active_backend()); }
}  // namespace

double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), std::min(x.size(), y.size()));
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), std::min(x.size(), y.size()));
}

void scale(double alpha, std::span<double> x) { active().scale(alpha, x.data(), x.size()); }

double l1_diff(std::span<const double> x, std::span<const double> y) {
  return active().l1_diff(x.data(), y.data(), std::min(x.size(), y.size()));
}

double max_abs(std::span<const double> x) { return active().max_abs(x.data(), x.size()); }

double max_rel_diff(std::span<const double> next, std::span<const double> prev, double floor) {
  return active().max_rel_diff(next.data(), prev.data(), floor, std::min(next.size(), prev.size()));
}

}  // namespace blink::simd
