#pragma once

// Dense vector kernels used by the iterative solvers (PPR, Katz, conductance CG)
// and by the convergence checks of the path-contribution iteration.
//
// Every kernel has a scalar reference implementation. Vector variants (AVX2 on
// x86-64, NEON on aarch64) are selected once at runtime and must agree with the
// scalar reference: element-wise and max-style kernels bit-for-bit, summing
// reductions up to reassociation error.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace blink::simd {

enum class Backend { kScalar, kAvx2, kNeon };

struct KernelTable {
  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  void (*scale)(double alpha, double* x, std::size_t n);
  double (*l1_diff)(const double* x, const double* y, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  double (*max_rel_diff)(const double* next, const double* prev, double floor, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
#if defined(BLINK_HAVE_AVX2)
const KernelTable& avx2_kernels() noexcept;
#endif
#if defined(BLINK_HAVE_NEON)
const KernelTable& neon_kernels() noexcept;
#endif

/// Backends compiled in and supported by the running CPU, scalar first.
std::vector<Backend> available_backends();

/// Kernel table for a backend; throws if the backend is unavailable.
const KernelTable& kernels_for(Backend backend);

/// Active backend. Chosen on first use: the widest available unless the
/// BLINK_SIMD environment variable names another one ("scalar", "avx2", "neon").
Backend active_backend();
void set_active_backend(Backend backend);
std::string_view backend_name(Backend backend) noexcept;

// Convenience wrappers dispatching through the active table.

double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> x);
double l1_diff(std::span<const double> x, std::span<const double> y);
double max_abs(std::span<const double> x);

/// max_i |next_i - prev_i| / max(|prev_i|, floor)
double max_rel_diff(std::span<const double> next, std::span<const double> prev, double floor);

}  // namespace blink::simd
