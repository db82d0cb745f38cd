#include "cyclotri/simd/bitops.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <bit>

namespace cyclotri::simd {

namespace {

void xor_into_neon(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] ^= src[i];
}

std::size_t first_set_bit_neon(const Word* row, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t v = vld1q_u64(row + i);
    if (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) break;
  }
  for (; i < words; ++i) {
    if (row[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(row[i]));
  }
  return npos;
}

std::size_t popcount_neon(const Word* row, std::size_t words) {
  std::size_t n = 0, i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(row + i)));
    n += vaddvq_u8(bytes);
  }
  for (; i < words; ++i) n += static_cast<std::size_t>(std::popcount(row[i]));
  return n;
}

}  // namespace

const BitKernels* neon_kernels() {
  static const BitKernels k{Backend::neon, xor_into_neon, first_set_bit_neon, popcount_neon};
  return &k;
}

}  // namespace cyclotri::simd

#else

namespace cyclotri::simd {
const BitKernels* neon_kernels() { return nullptr; }
}  // namespace cyclotri::simd

#endif
