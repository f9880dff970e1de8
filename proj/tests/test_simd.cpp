#include "blink/simd.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace blink::simd;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("every backend agrees with the scalar kernels") {
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 rng(7);
  for (Backend b : available_backends()) {
    CAPTURE(backend_name(b));
    const KernelTable& k = kernels_for(b);
    for (std::size_t n : {0, 1, 3, 4, 5, 7, 8, 15, 16, 17, 31, 100, 1001}) {
      CAPTURE(n);
      const auto x = random_vector(rng, n);
      const auto y = random_vector(rng, n);
      double mag = 0.0;
      for (std::size_t i = 0; i < n; ++i) mag += std::abs(x[i]) + std::abs(x[i] * y[i]);
      const double tol = 1e-14 * (mag + 1.0);
      CHECK(std::abs(k.sum(x.data(), n) - ref.sum(x.data(), n)) <= tol);
      CHECK(std::abs(k.dot(x.data(), y.data(), n) - ref.dot(x.data(), y.data(), n)) <= tol);
      CHECK(std::abs(k.l1_diff(x.data(), y.data(), n) - ref.l1_diff(x.data(), y.data(), n)) <= 1e-14 * (mag + 1e3));
      CHECK(k.max_abs(x.data(), n) == ref.max_abs(x.data(), n));
      CHECK(k.max_rel_diff(x.data(), y.data(), 1e-12, n) == ref.max_rel_diff(x.data(), y.data(), 1e-12, n));

      auto y1 = y, y2 = y;
      k.axpy(0.37, x.data(), y1.data(), n);
      ref.axpy(0.37, x.data(), y2.data(), n);
      CHECK(y1 == y2);
      auto x1 = x, x2 = x;
      k.scale(-1.5, x1.data(), n);
      ref.scale(-1.5, x2.data(), n);
      CHECK(x1 == x2);
    }
  }
}

TEST_CASE("scalar kernels on small inputs") {
  const KernelTable& k = scalar_kernels();
  const double x[] = {1.0, -2.0, 3.0};
  const double y[] = {0.5, 0.5, -1.0};
  CHECK(k.sum(x, 3) == 2.0);
  CHECK(k.dot(x, y, 3) == -3.5);
  CHECK(k.l1_diff(x, y, 3) == 0.5 + 2.5 + 4.0);
  CHECK(k.max_abs(x, 3) == 3.0);
  const double prev[] = {1.0, 0.0};
  const double next[] = {1.1, 1e-13};
  CHECK(k.max_rel_diff(next, prev, 1e-12, 2) == doctest::Approx(0.1));
}

TEST_CASE("backend selection") {
  const Backend before = active_backend();
  set_active_backend(Backend::kScalar);
  CHECK(active_backend() == Backend::kScalar);
  const std::vector<double> v{1.0, 2.0, 3.0};
  CHECK(sum(v) == 6.0);
  set_active_backend(before);
  CHECK(available_backends().front() == Backend::kScalar);
}
