// AVX2 variants of the GF(p) row kernels. Compiled with -mavx2 and selected at
// runtime only when the CPU reports AVX2 and p < kSimdPrimeLimit, which keeps
// every 32-bit intermediate product below 2^31.

#include "koszul/gfp_kernels.hpp"

#if KOSZUL_HAVE_AVX2

#include <immintrin.h>

namespace koszul::gfp {

namespace {

// Per-lane high 32 bits of the unsigned 32x32 product.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  const __m256i hi_mask = _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ull));
  return _mm256_or_si256(even, _mm256_and_si256(odd, hi_mask));
}

// Barrett step: t in [0, 2^32) with true value t = q*p + r, returns t mod p.
// With m = floor(2^32 / p) the estimate q' = (t*m)>>32 satisfies q-1 <= q' <= q,
// so one conditional subtract finishes the reduction. The subtract is done
// branch-free: r - p underflows to a huge value exactly when r < p, so the
// unsigned minimum of r and r - p is the canonical representative.
inline __m256i barrett(__m256i t, __m256i m, __m256i p) {
  __m256i q = mulhi_epu32(t, m);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, p));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

void axpy_avx2(uint32_t* y, const uint32_t* x, uint32_t c, size_t n, uint32_t p) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i mv = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i t = _mm256_add_epi32(yv, _mm256_mullo_epi32(cv, xv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), barrett(t, mv, pv));
  }
  for (; i < n; ++i)
    y[i] = static_cast<uint32_t>((y[i] + static_cast<uint64_t>(c) * x[i]) % p);
}

void scale_avx2(uint32_t* x, uint32_t c, size_t n, uint32_t p) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i mv = _mm256_set1_epi32(static_cast<int>(0xFFFFFFFFu / p));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i t = _mm256_mullo_epi32(cv, xv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), barrett(t, mv, pv));
  }
  for (; i < n; ++i)
    x[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * x[i]) % p);
}

}  // namespace koszul::gfp

#endif  // KOSZUL_HAVE_AVX2
