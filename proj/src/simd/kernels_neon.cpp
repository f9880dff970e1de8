#include "blink/simd.hpp"

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace blink::simd {
namespace {

double sum_neon(const double* x, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0);
  float64x2_t a1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 = vaddq_f64(a0, vld1q_f64(x + i));
    a1 = vaddq_f64(a1, vld1q_f64(x + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(a0, a1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) a0 = vaddq_f64(a0, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  double acc = vaddvq_f64(a0);
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  for (; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void scale_neon(double alpha, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] = alpha * x[i];
}

double l1_diff_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) a0 = vaddq_f64(a0, vabdq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  double acc = vaddvq_f64(a0);
  for (; i < n; ++i) acc += std::fabs(x[i] - y[i]);
  return acc;
}

double max_abs_neon(const double* x, std::size_t n) {
  float64x2_t m = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vabsq_f64(vld1q_f64(x + i)));
  double r = vmaxvq_f64(m);
  for (; i < n; ++i) r = std::max(r, std::fabs(x[i]));
  return r;
}

double max_rel_diff_neon(const double* next, const double* prev, double floor, std::size_t n) {
  const float64x2_t vf = vdupq_n_f64(floor);
  float64x2_t m = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t p = vld1q_f64(prev + i);
    const float64x2_t d = vabdq_f64(vld1q_f64(next + i), p);
    m = vmaxq_f64(m, vdivq_f64(d, vmaxq_f64(vabsq_f64(p), vf)));
  }
  double r = vmaxvq_f64(m);
  for (; i < n; ++i) {
    const double denom = std::max(std::fabs(prev[i]), floor);
    r = std::max(r, std::fabs(next[i] - prev[i]) / denom);
  }
  return r;
}

}  // namespace

const KernelTable& neon_kernels() noexcept {
  static const KernelTable table{sum_neon,     dot_neon,     axpy_neon,        scale_neon,
                                 l1_diff_neon, max_abs_neon, max_rel_diff_neon};
  return table;
}

}  // namespace blink::simd
