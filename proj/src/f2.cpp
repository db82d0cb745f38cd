#include "cyclotri/f2.hpp"

#include <algorithm>

namespace cyclotri {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 255) / 256 * 4), words_(rows * stride_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (row(r)[c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  const simd::Word bit = simd::Word{1} << (c % 64);
  if (value) row(r)[c / 64] |= bit; else row(r)[c / 64] &= ~bit;
}

void BitMatrix::flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= simd::Word{1} << (c % 64); }

std::size_t f2_rank(BitMatrix m, const simd::BitKernels& kernels) {
  const std::size_t words = m.stride();
  // pivot_row[c] = row whose lowest set bit is column c.
  std::vector<std::size_t> pivot_row(m.cols(), simd::npos);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    simd::Word* row = m.row(r);
    while (true) {
      const std::size_t c = kernels.first_set_bit(row, words);
      if (c == simd::npos) break;
      if (pivot_row[c] == simd::npos) {
        pivot_row[c] = r;
        ++rank;
        break;
      }
      kernels.xor_into(row, m.row(pivot_row[c]), words);
    }
  }
  return rank;
}

namespace {

std::size_t boundary_rank_f2(const SimplicialComplex& c, int dim) {
  if (dim < 1 || dim > c.dimension()) return 0;
  const auto& faces = c.faces(dim);
  const auto& lower = c.faces(dim - 1);
  BitMatrix m(faces.size(), lower.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < faces[i].size(); ++j) {
      const Simplex g = faces[i].without_index(j);
      m.set(i, static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), g) - lower.begin()));
    }
  }
  return f2_rank(std::move(m));
}

}  // namespace

std::vector<long long> betti_numbers_f2(const SimplicialComplex& c) {
  const int d = c.dimension();
  std::vector<long long> rank(static_cast<std::size_t>(std::max(d, 0) + 2), 0);
  for (int k = 1; k <= d; ++k) rank[static_cast<std::size_t>(k)] = static_cast<long long>(boundary_rank_f2(c, k));
  std::vector<long long> betti;
  for (int k = 0; k <= d; ++k) {
    betti.push_back(static_cast<long long>(c.faces(k).size()) - rank[static_cast<std::size_t>(k)] -
                    rank[static_cast<std::size_t>(k + 1)]);
  }
  return betti;
}

std::vector<long long> reduced_betti_f2(const SimplicialComplex& c, int max_dim) {
  std::vector<long long> out(static_cast<std::size_t>(max_dim + 2), 0);
  if (c.empty()) {
    out[0] = 1;
    return out;
  }
  std::vector<long long> betti = betti_numbers_f2(c);
  betti[0] -= 1;
  for (int k = 0; k <= max_dim && k < static_cast<int>(betti.size()); ++k) {
    out[static_cast<std::size_t>(k + 1)] = betti[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace cyclotri
