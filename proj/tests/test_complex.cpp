#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclotri/collapse.hpp"
#include "cyclotri/complex.hpp"
#include "cyclotri/error.hpp"
#include "cyclotri/manifold.hpp"

using namespace cyclotri;

namespace {

SimplicialComplex boundary_of_simplex(int d) {
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= d + 1; ++skip) {
    std::vector<Vertex> v;
    for (int i = 0; i <= d + 1; ++i)
      if (i != skip) v.push_back(i);
    facets.emplace_back(v);
  }
  return SimplicialComplex(d + 2, facets);
}

// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
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

}  // namespace

TEST_CASE("simplex basics") {
  const Simplex s{1, 4, 7};
  CHECK(s.dimension() == 2);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(5));
  CHECK(s.without_index(1) == Simplex{1, 7});
  CHECK(Simplex{1, 7}.is_face_of(s));
  CHECK(s.minus(Simplex{4}) == Simplex{1, 7});
  CHECK(Simplex{2}.join(Simplex{0, 5}) == Simplex{0, 2, 5});
  CHECK(Simplex::from_unsorted({5, 0, 3}) == Simplex{0, 3, 5});
  CHECK_THROWS_AS(Simplex::from_unsorted({1, 1}), Error);
  CHECK_THROWS_AS(Simplex::from_unsorted({-1, 2}), Error);
}

TEST_CASE("facet normalization drops contained simplices") {
  const SimplicialComplex c(5, {{0, 1, 2}, {0, 1}, {3, 4}, {0, 1, 2}});
  CHECK(c.facet_count() == 2);
  CHECK_FALSE(c.is_pure());
  CHECK(c.dimension() == 2);
  CHECK_THROWS_AS(SimplicialComplex(3, {{0, 1, 3}}), Error);
}

TEST_CASE("f-vector and Euler characteristic of simplex boundaries") {
  for (int d = 1; d <= 5; ++d) {
    const auto c = boundary_of_simplex(d);
    const auto f = f_vector(c);
    REQUIRE(f.size() == static_cast<std::size_t>(d + 1));
    // f_i = C(d+2, i+1)
    for (int i = 0; i <= d; ++i) {
      long long binom = 1;
      for (int j = 0; j < i + 1; ++j) binom = binom * (d + 2 - j) / (j + 1);
      CHECK(f[static_cast<std::size_t>(i)] == static_cast<std::size_t>(binom));
    }
    CHECK(euler_characteristic(c) == (d % 2 == 0 ? 2 : 0));
  }
}

TEST_CASE("link, span and components") {
  const auto t = moebius_torus();
  const auto lk = link(t, 0);
  CHECK(lk.facet_count() == 6);
  CHECK(lk.vertex_count() == 6);
  CHECK_THROWS_AS(link(t, Simplex{0, 1, 2}), Error);
  const Vertex some[] = {0, 1, 3};
  CHECK(span(t, some).facet_count() == 1);

  const SimplicialComplex two(10, {{0, 1}, {1, 2}, {5, 6}, {8}});
  const auto comps = connected_components(two);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].vertices() == std::vector<Vertex>{0, 1, 2});
  CHECK(comps[2].vertices() == std::vector<Vertex>{8});
}

TEST_CASE("boundary complex") {
  const SimplicialComplex disc(4, {{0, 1, 2}, {0, 2, 3}});
  CHECK(boundary_complex(disc).facet_count() == 4);
  CHECK(boundary_complex(moebius_torus()).empty());
  const SimplicialComplex book(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK_THROWS_WITH_AS(boundary_complex(book), doctest::Contains("not a pseudomanifold"), Error);
}

TEST_CASE("relabel preserves the isomorphism type") {
  const auto t = moebius_torus();
  std::vector<Vertex> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto r = relabel(t, perm);
  CHECK(f_vector(r) == f_vector(t));
  CHECK(identify_closed_surface(r).is_torus());
  for (const auto& f : t.facets()) {
    std::vector<Vertex> img;
    for (Vertex v : f) img.push_back(perm[static_cast<std::size_t>(v)]);
    CHECK(r.contains_face(Simplex::from_unsorted(img)));
  }
}

TEST_CASE("neighbourliness") {
  CHECK(is_neighbourly(moebius_torus()));
  CHECK(is_neighbourly(rp2_6()));
  CHECK_FALSE(is_neighbourly(SimplicialComplex(4, {{0, 1, 2}, {0, 2, 3}})));
}

TEST_CASE("surface recognition") {
  const auto s = identify_closed_surface(boundary_of_simplex(2));
  CHECK(s.is_sphere());
  const auto t = identify_closed_surface(moebius_torus());
  CHECK(t.is_torus());
  CHECK(t.euler_characteristic == 0);
  const auto p = identify_closed_surface(rp2_6());
  CHECK_FALSE(p.orientable);
  CHECK(p.genus == 1);
  const auto two = identify_closed_surface(facet_union(boundary_of_simplex(2), relabel(boundary_of_simplex(2), std::vector<Vertex>{4, 5, 6, 7})));
  CHECK(two.components == 2);
  CHECK_FALSE(two.connected);
  CHECK_THROWS_AS(identify_closed_surface(SimplicialComplex(4, {{0, 1, 2}, {0, 2, 3}})), Error);
}

TEST_CASE("3-manifold check") {
  const auto s3 = boundary_of_simplex(3);
  const auto r = is_combinatorial_3_manifold(s3);
  CHECK(r.is_manifold);
  CHECK(r.links.size() == 5);
  // Two tetrahedra boundaries glued at a vertex: the link of that vertex is two spheres.
  std::vector<Vertex> shift{0, 5, 6, 7, 8};
  const auto wedge = facet_union(s3, relabel(s3, shift));
  const auto w = is_combinatorial_3_manifold(wedge);
  CHECK_FALSE(w.is_manifold);
  REQUIRE(w.first_failing.has_value());
  CHECK(*w.first_failing == 0);
  CHECK_THROWS_AS(is_combinatorial_3_manifold(moebius_torus()), Error);
}

TEST_CASE("greedy collapse") {
  const SimplicialComplex tet(4, {{0, 1, 2, 3}});
  const auto c = greedy_collapse(tet);
  CHECK(c.facet_count() == 1);
  CHECK(c.dimension() == 0);
  // An annulus collapses onto a circle, never further.
  const SimplicialComplex annulus(6, {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
  const auto a = greedy_collapse(annulus);
  CHECK(a.dimension() == 1);
  CHECK(euler_characteristic(a) == 0);
  CHECK(greedy_collapse(moebius_torus()) == moebius_torus());
}
