#include "cyclotri/simd/bitops.hpp"

#include <bit>

namespace cyclotri::simd {

namespace {

void xor_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t first_set_bit_scalar(const Word* row, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (row[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(row[i]));
  }
  return npos;
}

std::size_t popcount_scalar(const Word* row, std::size_t words) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += static_cast<std::size_t>(std::popcount(row[i]));
  return n;
}

}  // namespace

const BitKernels& scalar_kernels() {
  static const BitKernels k{Backend::scalar, xor_into_scalar, first_set_bit_scalar, popcount_scalar};
  return k;
}

}  // namespace cyclotri::simd
