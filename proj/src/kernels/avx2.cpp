// Compiled with -mavx2; only reached through the runtime dispatcher.

#include <immintrin.h>

#include <cstddef>

#include "cmg/kernels.hpp"

namespace cmg::kernels::avx2 {

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + k);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + k);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; k < n; ++k) dst[k] ^= src[k];
}

namespace {

// x mod p for four lanes holding integers in [0, 2^31), computed in double
// precision where x, x/p and q*p are all exact enough to correct by one step.
inline __m128i mod_lanes(__m128i x, __m256d p_d, __m256d inv_p) {
  const __m256d xd = _mm256_cvtepi32_pd(x);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(xd, inv_p));
  __m256d r = _mm256_sub_pd(xd, _mm256_mul_pd(q, p_d));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p_d));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p_d, _CMP_GE_OQ), p_d));
  return _mm256_cvttpd_epi32(r);
}

}  // namespace

void submul_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                std::uint32_t p) {
  const std::uint32_t neg = (p - factor) % p;
  const std::size_t n = dst.size();
  const __m256i neg_v = _mm256_set1_epi32(static_cast<int>(neg));
  const __m256d p_d = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + k);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + k);
    const __m256i x = _mm256_add_epi32(_mm256_loadu_si256(d), _mm256_mullo_epi32(_mm256_loadu_si256(s), neg_v));
    const __m128i lo = mod_lanes(_mm256_castsi256_si128(x), p_d, inv_p);
    const __m128i hi = mod_lanes(_mm256_extracti128_si256(x, 1), p_d, inv_p);
    _mm256_storeu_si256(d, _mm256_set_m128i(hi, lo));
  }
  const std::uint64_t neg64 = neg;
  for (; k < n; ++k) dst[k] = static_cast<std::uint32_t>((dst[k] + neg64 * src[k]) % p);
}

}  // namespace cmg::kernels::avx2
