#include "blink/simd.hpp"

#include <algorithm>
#include <cmath>

namespace blink::simd {
namespace {

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = alpha * x[i];
}

double l1_diff_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i] - y[i]);
  return acc;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double max_rel_diff_scalar(const double* next, const double* prev, double floor, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double denom = std::max(std::fabs(prev[i]), floor);
    m = std::max(m, std::fabs(next[i] - prev[i]) / denom);
  }
  return m;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{sum_scalar,     dot_scalar,     axpy_scalar,        scale_scalar,
                                 l1_diff_scalar, max_abs_scalar, max_rel_diff_scalar};
  return table;
}

}  // namespace blink::simd
