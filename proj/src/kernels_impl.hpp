#pragma once

#include <cstddef>

namespace bcb::kernels {

namespace scalar {
double log_sum_exp(const double* x, std::size_t n);
void add_min(const double* a, const double* b, const double* w, double* out, std::size_t n);
void add_blend(const double* a, const double* b, const double* w, double lambda, double* out,
               std::size_t n);
void exp(const double* x, double* out, std::size_t n);
}  // namespace scalar

#if defined(BCB_HAVE_AVX2)
namespace avx2 {
double log_sum_exp(const double* x, std::size_t n);
void add_min(const double* a, const double* b, const double* w, double* out, std::size_t n);
void add_blend(const double* a, const double* b, const double* w, double lambda, double* out,
               std::size_t n);
void exp(const double* x, double* out, std::size_t n);
}  // namespace avx2
#endif

}  // namespace bcb::kernels
