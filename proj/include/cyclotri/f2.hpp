#pragma once

#include <cstddef>
#include <vector>

#include "cyclotri/complex.hpp"
#include "cyclotri/simd/bitops.hpp"

namespace cyclotri {

/// Dense GF(2) matrix with rows packed into 64-bit words.  Row strides are
/// padded to a multiple of four words.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  simd::Word* row(std::size_t r) { return words_.data() + r * stride_; }
  const simd::Word* row(std::size_t r) const { return words_.data() + r * stride_; }

 private:
  std::size_t rows_, cols_, stride_;
  std::vector<simd::Word> words_;
};

/// Rank over GF(2); the matrix is consumed as scratch space.
std::size_t f2_rank(BitMatrix m, const simd::BitKernels& kernels = simd::active_kernels());

/// Betti numbers over GF(2) for dimensions 0..dim(c).
std::vector<long long> betti_numbers_f2(const SimplicialComplex& c);

/// Reduced Betti numbers over GF(2), indexed from dimension -1: entry 0 is
/// 1 exactly when c is empty.
std::vector<long long> reduced_betti_f2(const SimplicialComplex& c, int max_dim);

}  // namespace cyclotri
