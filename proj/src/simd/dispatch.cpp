#include "cyclotri/simd/bitops.hpp"

#include <cstdlib>
#include <string>

namespace cyclotri::simd {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

namespace {

const BitKernels& pick() {
  const char* env = std::getenv("CYCLOTRI_SIMD");
  const std::string want = env ? env : "";
  if (want == "scalar") return scalar_kernels();
  if (want == "avx2" && avx2_kernels()) return *avx2_kernels();
  if (want == "neon" && neon_kernels()) return *neon_kernels();
  if (const BitKernels* k = avx2_kernels()) return *k;
  if (const BitKernels* k = neon_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const BitKernels& active_kernels() {
  static const BitKernels& k = pick();
  return k;
}

}  // namespace cyclotri::simd
