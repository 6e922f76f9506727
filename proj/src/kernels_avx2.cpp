// Compiled with -mavx2; only reached after a run-time CPU check.
#include <immintrin.h>

#include "esa/kernels.hpp"

namespace esa::kernels::detail {

std::int64_t diff_l1_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = zero;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i d = _mm256_abs_epi8(_mm256_sub_epi8(va, vb));
    // Horizontal byte sums into four 64-bit lanes.
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(d, zero));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3] + diff_l1_scalar(a + i, b + i, n - i);
}

namespace {

// Inclusive prefix sum of eight int32 lanes.
inline __m256i scan8(__m256i v) {
  v = _mm256_add_epi32(v, _mm256_slli_si256(v, 4));
  v = _mm256_add_epi32(v, _mm256_slli_si256(v, 8));
  const __m256i carry = _mm256_permutevar8x32_epi32(v, _mm256_set1_epi32(3));
  return _mm256_add_epi32(v, _mm256_blend_epi32(_mm256_setzero_si256(), carry, 0xF0));
}

}  // namespace

std::int64_t diff_summing_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  const __m256i last = _mm256_set1_epi32(7);
  __m256i running = _mm256_setzero_si256();
  __m256i hi = running, lo = running;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i va = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(a + i));
    const __m128i vb = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(b + i));
    const __m256i d = _mm256_sub_epi32(_mm256_cvtepi8_epi32(va), _mm256_cvtepi8_epi32(vb));
    const __m256i p = _mm256_add_epi32(scan8(d), running);
    hi = _mm256_max_epi32(hi, p);
    lo = _mm256_min_epi32(lo, p);
    running = _mm256_permutevar8x32_epi32(p, last);
  }
  alignas(32) std::int32_t h[8], l[8], r[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(h), hi);
  _mm256_store_si256(reinterpret_cast<__m256i*>(l), lo);
  _mm256_store_si256(reinterpret_cast<__m256i*>(r), running);
  std::int64_t best_hi = 0, best_lo = 0;
  for (int j = 0; j < 8; ++j) {
    if (h[j] > best_hi) best_hi = h[j];
    if (l[j] < best_lo) best_lo = l[j];
  }
  std::int64_t prefix = r[0];
  for (; i < n; ++i) {
    prefix += int{a[i]} - int{b[i]};
    if (prefix > best_hi) best_hi = prefix;
    if (prefix < best_lo) best_lo = prefix;
  }
  return best_hi > -best_lo ? best_hi : -best_lo;
}

}  // namespace esa::kernels::detail
