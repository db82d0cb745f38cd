#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Packed GF(2) row kernels.  Every backend computes bit-identical results;
// the scalar one is the reference the others are tested against.

namespace cyclotri::simd {

using Word = std::uint64_t;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

enum class Backend { scalar, avx2, neon };

struct BitKernels {
  Backend backend;
  /// dst[i] ^= src[i] for i < words
  void (*xor_into)(Word* dst, const Word* src, std::size_t words);
  /// Index of the lowest set bit in the first `words` words, or npos.
  std::size_t (*first_set_bit)(const Word* row, std::size_t words);
  /// Number of set bits.
  std::size_t (*popcount)(const Word* row, std::size_t words);
};

const BitKernels& scalar_kernels();
/// Null when the backend is not compiled in or not supported by this CPU.
const BitKernels* avx2_kernels();
const BitKernels* neon_kernels();

/// Kernels picked once per process: the best supported backend, unless
/// CYCLOTRI_SIMD=scalar|avx2|neon asks for a specific one.
const BitKernels& active_kernels();

std::string_view backend_name(Backend b);

}  // namespace cyclotri::simd
