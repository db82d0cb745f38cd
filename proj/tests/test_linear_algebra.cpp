#include <doctest.h>

#include <random>

#include "cyclotri/complex.hpp"
#include "cyclotri/diff_cycle.hpp"
#include "cyclotri/error.hpp"
#include "cyclotri/homology.hpp"
#include "cyclotri/int_matrix.hpp"
#include "cyclotri/sparse_reduction.hpp"

using namespace cyclotri;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Cofactor expansion; only for tiny matrices.
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * cofactor_det(minor);
    det += (j % 2 ? -term : term);
  }
  return det;
}

SimplicialComplex moebius_torus() {
  std::vector<Simplex> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back(Simplex::from_unsorted({i, (i + 1) % 7, (i + 3) % 7}));
    f.push_back(Simplex::from_unsorted({i, (i + 2) % 7, (i + 3) % 7}));
  }
  return SimplicialComplex(7, f);
}

SimplicialComplex rp2_6() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

HomologyGroup Z(long long betti, std::vector<long> torsion = {}) {
  HomologyGroup g;
  g.betti = betti;
  for (long t : torsion) g.torsion.emplace_back(t);
  return g;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto m = random_matrix(rng, n, n, -6, 6);
    CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("unimodular inverse") {
  const IntMatrix u{{2, 1}, {5, 3}};
  CHECK(u * unimodular_inverse(u) == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);
}

TEST_CASE("Smith normal form certificates") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 6, c = 1 + (trial / 6) % 6;
    const auto m = random_matrix(rng, r, c, -9, 9);
    const auto s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.v * s.v_inverse == IntMatrix::identity(c));
    CHECK((determinant(s.u) == 1 || determinant(s.u) == -1));
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) CHECK(s.factors[i + 1] % s.factors[i] == 0);
    for (const auto& f : s.factors) CHECK(f > 0);
    if (r == c && s.rank() == r) {
      Integer prod = 1;
      for (const auto& f : s.factors) prod *= f;
      CHECK(prod == abs(determinant(m)));
    }
  }
}

TEST_CASE("Smith normal form of known matrices") {
  CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).factors ==
        std::vector<Integer>{2, 6, 12});
  CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).rank() == 0);
  CHECK(invariant_factors_of({4, 6}) == std::vector<Integer>{2, 12});
  CHECK(invariant_factors_of({1, 3, 5}) == std::vector<Integer>{15});
}

TEST_CASE("presentation reduction matches the dense Smith form") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int gens = 2 + trial % 7;
    const std::size_t rels = 1 + static_cast<std::size_t>(trial % 5);
    const auto m = random_matrix(rng, rels, static_cast<std::size_t>(gens), -3, 3);
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < rels; ++i) {
      SparseRow row;
      for (int j = 0; j < gens; ++j)
        if (m(i, static_cast<std::size_t>(j)) != 0) row.emplace_back(j, m(i, static_cast<std::size_t>(j)));
      rows.push_back(row);
    }
    const PresentationReduction red(gens, rows, true);
    const auto dense = smith_normal_form(m);
    std::vector<Integer> torsion;
    for (const auto& f : dense.factors)
      if (f > 1) torsion.push_back(f);
    CHECK(red.torsion() == torsion);
    CHECK(red.free_rank() == static_cast<std::size_t>(gens) - dense.rank());
    // Each relation is zero in the quotient.
    for (std::size_t i = 0; i < rels; ++i) {
      std::vector<Integer> w(static_cast<std::size_t>(gens));
      for (int j = 0; j < gens; ++j) w[static_cast<std::size_t>(j)] = m(i, static_cast<std::size_t>(j));
      for (const auto& x : red.coordinates(w)) CHECK(x == 0);
    }
    // Representatives land on unit coordinate vectors.
    for (std::size_t k = 0; k < red.coordinate_count(); ++k) {
      const auto coords = red.coordinates(red.representative(k));
      for (std::size_t j = 0; j < coords.size(); ++j) CHECK(coords[j] == (j == k ? 1 : 0));
    }
  }
}

TEST_CASE("homology of standard complexes") {
  CHECK(homology_groups(SimplicialComplex(4, {{0, 1, 2, 3}})).to_string() == "(Z, 0, 0, 0)");
  CHECK(homology_groups(moebius_torus()).groups == std::vector<HomologyGroup>{Z(1), Z(2), Z(1)});
  CHECK(homology_groups(rp2_6()).groups == std::vector<HomologyGroup>{Z(1), Z(0, {2}), Z(0)});
  CHECK(homology_groups(rp2_6(), true).groups == std::vector<HomologyGroup>{Z(0), Z(0, {2}), Z(0)});
  CHECK(homology_groups(expand(cyclic_polytope_boundary(10))).to_string() == "(Z, 0, 0, Z)");
  const SimplicialComplex two_points(3, {{0}, {2}});
  CHECK(homology_groups(two_points).to_string() == "(Z^2)");
}

TEST_CASE("first homology classes on the torus") {
  const auto h = FirstHomology::of(moebius_torus());
  CHECK(h->group() == Z(2));
  CHECK(h->free_rank() == 2);
  // <0,1,2,...,6,0> steps by one around a generator; the boundary of a triangle is null.
  const auto around = h->path_to_cycle(VertexPath{{0, 1, 2, 3, 4, 5, 6, 0}});
  const auto triangle = h->path_to_cycle(VertexPath{{0, 1, 3, 0}});
  CHECK_FALSE(around.is_zero());
  CHECK(triangle.is_zero());
  CHECK(are_homologous(around, h->path_to_cycle(VertexPath{{1, 2, 3, 4, 5, 6, 0, 1}})));
  CHECK_THROWS_AS(h->path_to_cycle(VertexPath{{0, 1, 2}}), Error);
  // The shift v -> v+1 preserves the class of the step-one loop.
  std::vector<Vertex> shift{1, 2, 3, 4, 5, 6, 0};
  const auto m = h->induced_matrix(shift);
  CHECK(m.rows() == 2);
  CHECK((determinant(m) == 1 || determinant(m) == -1));
  for (std::size_t i = 0; i < h->free_rank(); ++i) CHECK_FALSE(h->basis_cycle(i).is_zero());
}

TEST_CASE("first homology with torsion") {
  const auto h = FirstHomology::of(rp2_6());
  REQUIRE(h->torsion_rank() == 1);
  const auto g = h->basis_cycle(0);
  CHECK(g.coordinates == std::vector<Integer>{1});
  std::vector<std::pair<Simplex, Integer>> doubled;
  for (const auto& [e, c] : g.chain) doubled.emplace_back(e, 2 * c);
  CHECK(h->chain_to_cycle(doubled).is_zero());
  const auto other = FirstHomology::of(moebius_torus());
  CHECK_THROWS_AS(are_homologous(g, other->basis_cycle(0)), Error);
}
