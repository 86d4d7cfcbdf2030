// AVX2 variants of the GF(p) row kernels.  This file is compiled with -mavx2
// and only ever entered after a runtime CPU check.
#include "radlie/kernels.hpp"

#include <immintrin.h>

namespace radlie::simd::avx2 {

namespace {

// Reduce 4 non-negative doubles (< 2^31, integral) mod p.
inline __m256d reduce_pd(__m256d v, __m256d p, __m256d invp) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, invp));
  __m256d r = _mm256_sub_pd(v, _mm256_mul_pd(q, p));
  // The reciprocal is off by at most one unit, so one correction each way.
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

// Reduce 8 lanes of v (each in [0, 2^31)) mod p.
inline __m256i reduce_epi32(__m256i v, __m256d p, __m256d invp) {
  __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(v));
  __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(v, 1));
  lo = reduce_pd(lo, p, invp);
  hi = reduce_pd(hi, p, invp);
  __m128i rlo = _mm256_cvttpd_epi32(lo);
  __m128i rhi = _mm256_cvttpd_epi32(hi);
  return _mm256_set_m128i(rhi, rlo);
}

}  // namespace

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
  if (a == 0) return;
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    // a, x < 2^15 so the product fits in 30 bits and the sum in 31.
    __m256i s = _mm256_add_epi32(yv, _mm256_mullo_epi32(av, xv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_epi32(s, pd, invp));
  }
  for (; i < n; ++i) y[i] = (y[i] + a * x[i]) % p;
}

void scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i s = _mm256_mullo_epi32(av, yv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_epi32(s, pd, invp));
  }
  for (; i < n; ++i) y[i] = (a * y[i]) % p;
}

std::uint32_t dot_mod(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  __m256i acc = _mm256_setzero_si256();  // four 64-bit partial sums
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    __m256i prod = reduce_epi32(_mm256_mullo_epi32(xv, yv), pd, invp);
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(prod)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(prod, 1)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = (lanes[0] + lanes[1] + lanes[2] + lanes[3]) % p;
  for (; i < n; ++i) total = (total + static_cast<std::uint64_t>(x[i]) * y[i]) % p;
  return static_cast<std::uint32_t>(total);
}

}  // namespace radlie::simd::avx2
