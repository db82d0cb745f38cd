#include "cyclotri/simd/bitops.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <bit>

namespace cyclotri::simd {

namespace {

__attribute__((target("avx2"))) void xor_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) std::size_t first_set_bit_avx2(const Word* row, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    if (!_mm256_testz_si256(v, v)) break;
  }
  for (; i < words; ++i) {
    if (row[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(row[i]));
  }
  return npos;
}

// Nibble-table popcount (Mula); the 64-bit lane sums come from sad_epu8.
__attribute__((target("avx2"))) std::size_t popcount_avx2(const Word* row, std::size_t words) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i lo = _mm256_shuffle_epi8(table, _mm256_and_si256(v, low));
    const __m256i hi = _mm256_shuffle_epi8(table, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t n = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < words; ++i) n += static_cast<std::size_t>(std::popcount(row[i]));
  return n;
}

}  // namespace

const BitKernels* avx2_kernels() {
  static const BitKernels k{Backend::avx2, xor_into_avx2, first_set_bit_avx2, popcount_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &k : nullptr;
}

}  // namespace cyclotri::simd

#else

namespace cyclotri::simd {
const BitKernels* avx2_kernels() { return nullptr; }
}  // namespace cyclotri::simd

#endif
