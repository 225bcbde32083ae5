// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "kernels_impl.hpp"

namespace bcb::kernels::avx2 {
namespace {

// Cephes-style exp: x = k ln2 + r with |r| <= ln2/2, a (3,4) Pade form in r,
// then scaling by 2^k split in two factors so both stay normal.
inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
  const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
  const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
  const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
  const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
  const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
  const __m256d q3 = _mm256_set1_pd(2.00000000000000000009e0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d hi_limit = _mm256_set1_pd(709.782712893383973096);
  const __m256d lo_limit = _mm256_set1_pd(-745.133219101941108420);

  const __m256d xc = _mm256_min_pd(_mm256_max_pd(x, lo_limit), hi_limit);
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(xc, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, xc);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d p = _mm256_fmadd_pd(p0, rr, p1);
  p = _mm256_fmadd_pd(p, rr, p2);
  p = _mm256_mul_pd(p, r);
  __m256d q = _mm256_fmadd_pd(q0, rr, q1);
  q = _mm256_fmadd_pd(q, rr, q2);
  q = _mm256_fmadd_pd(q, rr, q3);
  __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, one);

  const __m256d k1 = _mm256_floor_pd(_mm256_mul_pd(k, _mm256_set1_pd(0.5)));
  const __m256d k2 = _mm256_sub_pd(k, k1);
  const __m256i bias = _mm256_set1_epi64x(1023);
  const __m256i e1 = _mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(k1)), bias), 52);
  const __m256i e2 = _mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(k2)), bias), 52);
  e = _mm256_mul_pd(_mm256_mul_pd(e, _mm256_castsi256_pd(e1)), _mm256_castsi256_pd(e2));

  e = _mm256_blendv_pd(e, _mm256_setzero_pd(), _mm256_cmp_pd(x, lo_limit, _CMP_LT_OQ));
  e = _mm256_blendv_pd(e, _mm256_set1_pd(INFINITY), _mm256_cmp_pd(x, hi_limit, _CMP_GT_OQ));
  return _mm256_blendv_pd(e, x, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
}

inline double hmax(__m256d v) {
  const __m128d m = _mm_max_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

inline double hsum(__m256d v) {
  const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

// Loads the tail [i, n) padded with `fill`.
inline __m256d load_tail(const double* x, std::size_t i, std::size_t n, double fill) {
  alignas(32) double buf[4] = {fill, fill, fill, fill};
  std::copy(x + i, x + n, buf);
  return _mm256_load_pd(buf);
}

}  // namespace

double log_sum_exp(const double* x, std::size_t n) {
  const std::size_t body = n & ~std::size_t{3};
  __m256d vmax = _mm256_set1_pd(-INFINITY);
  std::size_t i = 0;
  for (; i < body; i += 4) vmax = _mm256_max_pd(vmax, _mm256_loadu_pd(x + i));
  if (i < n) vmax = _mm256_max_pd(vmax, load_tail(x, i, n, -INFINITY));
  const double max = hmax(vmax);
  if (!std::isfinite(max)) return max;

  const __m256d shift = _mm256_set1_pd(max);
  __m256d acc = _mm256_setzero_pd();
  for (i = 0; i < body; i += 4) {
    acc = _mm256_add_pd(acc, exp_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), shift)));
  }
  if (i < n) acc = _mm256_add_pd(acc, exp_pd(_mm256_sub_pd(load_tail(x, i, n, -INFINITY), shift)));
  return max + std::log(hsum(acc));
}

void add_min(const double* a, const double* b, const double* w, double* out, std::size_t n) {
  const std::size_t body = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < body; i += 4) {
    const __m256d m = _mm256_min_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(w + i), m));
  }
  for (; i < n; ++i) out[i] = w[i] + std::min(a[i], b[i]);
}

void add_blend(const double* a, const double* b, const double* w, double lambda, double* out,
               std::size_t n) {
  const std::size_t body = n & ~std::size_t{3};
  const __m256d vl = _mm256_set1_pd(lambda);
  const __m256d vm = _mm256_set1_pd(1.0 - lambda);
  std::size_t i = 0;
  for (; i < body; i += 4) {
    const __m256d mix = _mm256_fmadd_pd(vl, _mm256_loadu_pd(a + i), _mm256_mul_pd(vm, _mm256_loadu_pd(b + i)));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(w + i), mix));
  }
  for (; i < n; ++i) out[i] = w[i] + std::fma(lambda, a[i], (1.0 - lambda) * b[i]);
}

void exp(const double* x, double* out, std::size_t n) {
  const std::size_t body = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < body; i += 4) _mm256_storeu_pd(out + i, exp_pd(_mm256_loadu_pd(x + i)));
  if (i < n) {
    alignas(32) double buf[4];
    _mm256_store_pd(buf, exp_pd(load_tail(x, i, n, 0.0)));
    std::copy(buf, buf + (n - i), out + i);
  }
}

}  // namespace bcb::kernels::avx2
