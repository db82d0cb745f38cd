#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclotri/diff_cycle.hpp"
#include "cyclotri/error.hpp"
#include "cyclotri/f2.hpp"
#include "cyclotri/morse.hpp"
#include "cyclotri/mpqr.hpp"
#include "cyclotri/simd/bitops.hpp"

using namespace cyclotri;

namespace {

// Textbook elimination over vector<vector<bool>>.
std::size_t naive_rank(std::vector<std::vector<bool>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] != m[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<const simd::BitKernels*> all_kernels() {
  std::vector<const simd::BitKernels*> out{&simd::scalar_kernels()};
  if (auto* k = simd::avx2_kernels()) out.push_back(k);
  if (auto* k = simd::neon_kernels()) out.push_back(k);
  return out;
}

SimplicialComplex rp2_6() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

}  // namespace

TEST_CASE("bit kernels agree with the scalar reference") {
  std::mt19937_64 rng(42);
  const auto& ref = simd::scalar_kernels();
  for (const auto* k : all_kernels()) {
    CAPTURE(simd::backend_name(k->backend));
    for (std::size_t words : {1u, 3u, 4u, 5u, 8u, 13u, 64u}) {
      std::vector<simd::Word> a(words), b(words);
      for (auto& w : a) w = rng();
      for (auto& w : b) w = rng();
      auto x = a, y = a;
      ref.xor_into(x.data(), b.data(), words);
      k->xor_into(y.data(), b.data(), words);
      CHECK(x == y);
      CHECK(k->popcount(a.data(), words) == ref.popcount(a.data(), words));
      std::vector<simd::Word> sparse(words, 0);
      CHECK(k->first_set_bit(sparse.data(), words) == simd::npos);
      const std::size_t bit = rng() % (64 * words);
      sparse[bit / 64] |= simd::Word{1} << (bit % 64);
      CHECK(k->first_set_bit(sparse.data(), words) == bit);
      CHECK(ref.first_set_bit(sparse.data(), words) == bit);
    }
  }
}

TEST_CASE("GF(2) rank against naive elimination") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 300;
    BitMatrix m(r, c);
    std::vector<std::vector<bool>> naive(r, std::vector<bool>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % 4 == 0) {
          m.set(i, j);
          naive[i][j] = true;
        }
    const auto want = naive_rank(naive);
    for (const auto* k : all_kernels()) CHECK(f2_rank(m, *k) == want);
  }
}

TEST_CASE("Betti numbers over GF(2)") {
  CHECK(betti_numbers_f2(rp2_6()) == std::vector<long long>{1, 1, 1});
  CHECK(betti_numbers_f2(expand(cyclic_polytope_boundary(9))) == std::vector<long long>{1, 0, 0, 1});
  CHECK(reduced_betti_f2(SimplicialComplex(), 2) == std::vector<long long>{1, 0, 0, 0});
  CHECK(reduced_betti_f2(SimplicialComplex(4, {{0}, {3}}), 1) == std::vector<long long>{0, 1, 0});
}

TEST_CASE("rsl orders") {
  const auto f = RslFunction::from_order({2, 0, 1}, 3);
  CHECK(f.rank(2) == 0);
  CHECK(f.rank(1) == 2);
  CHECK_THROWS_AS(RslFunction::from_order({0, 0, 1}, 3), Error);
  CHECK(RslFunction::random(20, 7).order() == RslFunction::random(20, 7).order());
  CHECK(RslFunction::random(20, 7).order() != RslFunction::random(20, 8).order());
  auto g = RslFunction::identity(4);
  g.swap_adjacent(1);
  CHECK(g.order() == std::vector<Vertex>{0, 2, 1, 3});
  CHECK(g.rank(2) == 1);
}

TEST_CASE("critical points on the cyclic polytope boundary") {
  for (int n : {6, 9, 14}) {
    const auto c = expand(cyclic_polytope_boundary(n));
    const auto pts = critical_points(c, RslFunction::identity(n));
    CHECK(morse_vector(c, pts) == MorseVector{{1, 0, 0, 1}});
  }
}

TEST_CASE("critical points of M(p,q,r) under the identity") {
  const auto c = expand(build_M(2, 3, 1));
  CHECK(morse_vector(c, critical_points(c, RslFunction::identity(c.label_bound()))) == MorseVector{{1, 2, 2, 1}});
  const auto d = expand(build_M(3, 4, 12));
  CHECK(morse_vector(d, critical_points(d, RslFunction::identity(d.label_bound()))) == MorseVector{{1, 6, 6, 1}});
}

TEST_CASE("link table agrees with direct evaluation") {
  const auto c = expand(build_M(2, 5, 3));
  const LinkTable table(c);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto f = RslFunction::random(c.label_bound(), seed);
    CHECK(table.critical_points(f) == critical_points(c, f));
  }
}

TEST_CASE("Heegaard bound search") {
  CHECK(heegaard_upper_bound(expand(cyclic_polytope_boundary(10))).genus_bound == 0);
  const auto m = expand(build_M(2, 3, 5));
  const auto hb = heegaard_upper_bound(m);
  CHECK(hb.genus_bound <= 2);
  CHECK(hb.morse.counts[1] == hb.genus_bound);
  CHECK(LinkTable(m).index_one_total(hb.witness) == hb.genus_bound);
  CHECK(heegaard_upper_bound(expand(build_M(2, 3, 2))).genus_bound == 1);
}

TEST_CASE("vertices next to a missing link vertex share their critical profile") {
  int compared = 0;
  for (auto [p, q, r] : {std::tuple{2, 5, 3}, {3, 4, 1}, {2, 7, 1}, {3, 5, 4}}) {
    const auto c = expand(build_M(p, q, r));
    const int n = c.label_bound();
    const auto lk = link(c, 0);
    const auto& lv = lk.vertices();
    const LinkTable table(c);
    const auto f = RslFunction::identity(n);
    for (int v = 2; v < n; ++v) {
      if (std::binary_search(lv.begin(), lv.end(), n - v)) continue;
      CHECK(table.lower_link_betti(v, f) == table.lower_link_betti(v - 1, f));
      ++compared;
    }
  }
  CHECK(compared > 0);
}
