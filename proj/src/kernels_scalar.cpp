#include <algorithm>
#include <cmath>

#include "kernels_impl.hpp"

namespace bcb::kernels::scalar {

double log_sum_exp(const double* x, std::size_t n) {
  double max = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) max = std::max(max, x[i]);
  if (!std::isfinite(max)) return max;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += std::exp(x[i] - max);
  return max + std::log(sum);
}

void add_min(const double* a, const double* b, const double* w, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = w[i] + std::min(a[i], b[i]);
}

void add_blend(const double* a, const double* b, const double* w, double lambda, double* out,
               std::size_t n) {
  const double mu = 1.0 - lambda;
  for (std::size_t i = 0; i < n; ++i) out[i] = w[i] + (lambda * a[i] + mu * b[i]);
}

void exp(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

}  // namespace bcb::kernels::scalar
