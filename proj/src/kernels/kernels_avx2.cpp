// Compiled with -mavx2; only reached through the dispatch table after a CPU check.
#include "kernels_internal.hpp"

#include <immintrin.h>

#include <cmath>

namespace cgw::kernels::detail {

void compose_then_avx2(const Perm16* xs, const Perm16& z, Perm16* out, std::size_t n) {
  const __m128i z128 = _mm_load_si128(reinterpret_cast<const __m128i*>(z.img.data()));
  const __m256i zz = _mm256_broadcastsi128_si256(z128);
  const __m256i low_nibble = _mm256_set1_epi8(0x0f);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs[i].img.data()));
    x = _mm256_and_si256(x, low_nibble);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[i].img.data()),
                       _mm256_shuffle_epi8(zz, x));
  }
  if (i < n) {
    __m128i x = _mm_load_si128(reinterpret_cast<const __m128i*>(xs[i].img.data()));
    x = _mm_and_si128(x, _mm_set1_epi8(0x0f));
    _mm_store_si128(reinterpret_cast<__m128i*>(out[i].img.data()), _mm_shuffle_epi8(z128, x));
  }
}

void mod_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                   std::uint32_t prime, std::size_t n) {
  if (prime >= kSimdPrimeBound) {
    mod_axpy_scalar(dst, src, factor, prime, n);
    return;
  }
  // Operands are below 2^26, so factor * src + dst < 2^53 is exact in double.
  const __m256d f = _mm256_set1_pd(static_cast<double>(factor));
  const __m256d p = _mm256_set1_pd(static_cast<double>(prime));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(prime));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    const __m256d s =
        _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    const __m256d v = _mm256_add_pd(_mm256_mul_pd(f, s), d);
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, inv_p));
    __m256d r = _mm256_sub_pd(v, _mm256_mul_pd(q, p));
    // The quotient estimate is off by at most one in either direction.
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r));
  }
  mod_axpy_scalar(dst + i, src + i, factor, prime, n - i);
}

double weighted_abs_dev_avx2(const double* value, const double* weight, double center,
                             std::size_t n) {
  const __m256d c = _mm256_set1_pd(center);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dev = _mm256_and_pd(abs_mask, _mm256_sub_pd(_mm256_loadu_pd(value + i), c));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(weight + i), dev));
  }
  const __m128d pair =
      _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double total = _mm_cvtsd_f64(_mm_hadd_pd(pair, pair));
  for (; i < n; ++i) total += weight[i] * std::fabs(value[i] - center);
  return total;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  const __m128d pair =
      _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double total = _mm_cvtsd_f64(_mm_hadd_pd(pair, pair));
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

}  // namespace cgw::kernels::detail
