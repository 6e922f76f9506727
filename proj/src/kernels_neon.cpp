// AArch64 only; Advanced SIMD is part of the base architecture there.
#include <arm_neon.h>

#include "esa/kernels.hpp"

namespace esa::kernels::detail {

std::int64_t diff_l1_neon(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  uint64x2_t total = vdupq_n_u64(0);
  std::size_t i = 0;
  while (i + 16 <= n) {
    // Each lane of acc grows by at most 2 * 126 per step; flush before 256
    // steps so the 16-bit lanes cannot overflow.
    uint16x8_t acc = vdupq_n_u16(0);
    for (int step = 0; step < 255 && i + 16 <= n; ++step, i += 16) {
      const uint8x16_t d = vreinterpretq_u8_s8(vabdq_s8(vld1q_s8(a + i), vld1q_s8(b + i)));
      acc = vpadalq_u8(acc, d);
    }
    total = vpadalq_u32(total, vpaddlq_u16(acc));
  }
  return static_cast<std::int64_t>(vgetq_lane_u64(total, 0) + vgetq_lane_u64(total, 1)) +
         diff_l1_scalar(a + i, b + i, n - i);
}

namespace {

// Inclusive prefix sum of four int32 lanes.
inline int32x4_t scan4(int32x4_t v) {
  const int32x4_t zero = vdupq_n_s32(0);
  v = vaddq_s32(v, vextq_s32(zero, v, 3));
  return vaddq_s32(v, vextq_s32(zero, v, 2));
}

}  // namespace

std::int64_t diff_summing_neon(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  int32x4_t running = vdupq_n_s32(0);
  int32x4_t hi = running, lo = running;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const int16x8_t d = vsubl_s8(vld1_s8(a + i), vld1_s8(b + i));
    const int32x4_t p0 = vaddq_s32(scan4(vmovl_s16(vget_low_s16(d))), running);
    running = vdupq_laneq_s32(p0, 3);
    const int32x4_t p1 = vaddq_s32(scan4(vmovl_s16(vget_high_s16(d))), running);
    running = vdupq_laneq_s32(p1, 3);
    hi = vmaxq_s32(hi, vmaxq_s32(p0, p1));
    lo = vminq_s32(lo, vminq_s32(p0, p1));
  }
  std::int64_t best_hi = vmaxvq_s32(hi), best_lo = vminvq_s32(lo);
  std::int64_t prefix = vgetq_lane_s32(running, 0);
  for (; i < n; ++i) {
    prefix += int{a[i]} - int{b[i]};
    if (prefix > best_hi) best_hi = prefix;
    if (prefix < best_lo) best_lo = prefix;
  }
  return best_hi > -best_lo ? best_hi : -best_lo;
}

}  // namespace esa::kernels::detail
