#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclotri/diff_cycle.hpp"
#include "cyclotri/error.hpp"
#include "cyclotri/homology.hpp"

using namespace cyclotri;

namespace {

std::set<std::vector<int>> translates(const std::vector<int>& entries) {
  const int n = std::accumulate(entries.begin(), entries.end(), 0);
  std::set<std::vector<int>> out;
  for (int t = 0; t < n; ++t) {
    std::vector<int> s;
    int v = 0;
    for (std::size_t i = 0; i + 1 <= entries.size(); ++i) {
      s.push_back((v + t) % n);
      v += entries[i];
    }
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

std::set<std::vector<int>> facet_set(const SimplicialComplex& c) {
  std::set<std::vector<int>> out;
  for (const auto& f : c.facets()) out.insert(std::vector<int>(f.begin(), f.end()));
  return out;
}

bool gale_even(const std::vector<int>& s, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (std::count(s.begin(), s.end(), i) || std::count(s.begin(), s.end(), j)) continue;
      int between = 0;
      for (int x : s) between += x > i && x < j;
      if (between % 2) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("canonical rotation") {
  CHECK(DifferenceCycle({3, 1, 2, 5}).entries()[0] == 1);
  CHECK(DifferenceCycle({3, 1, 2, 5}) == DifferenceCycle({1, 2, 5, 3}));
  CHECK(DifferenceCycle({2, 1, 2, 1}).to_string() == "(1:2:1:2)");
  CHECK_THROWS_AS(DifferenceCycle({1, 0, 2}), Error);
  CHECK_THROWS_AS(DifferenceCycle({}), Error);
}

TEST_CASE("orbit length matches brute-force translation") {
  const std::vector<std::vector<int>> cases{{1, 1, 1, 1}, {1, 3, 1, 3}, {2, 2, 2, 2}, {1, 2, 3, 4},
                                            {1, 2, 1, 2}, {3, 3, 3, 5}, {1, 5, 1, 5}, {2, 4, 2, 4}};
  for (const auto& e : cases) {
    const DifferenceCycle d(e);
    const auto brute = translates(e);
    CHECK(d.orbit_length() == static_cast<int>(brute.size()));
    std::set<std::vector<int>> orbit;
    for (const auto& s : d.orbit()) orbit.insert(std::vector<int>(s.begin(), s.end()));
    CHECK(orbit == brute);
    CHECK(d.is_short() == (brute.size() < static_cast<std::size_t>(d.vertex_count())));
  }
}

TEST_CASE("difference cycle of a simplex") {
  CHECK(difference_cycle_of(Simplex{2, 3, 5, 9}, 12) == DifferenceCycle({1, 2, 4, 5}));
  CHECK(DifferenceCycle({1, 2, 4, 5}).base_simplex() == Simplex{0, 1, 3, 7});
}

TEST_CASE("cyclic complexes reject repeated orbits") {
  CHECK_THROWS_WITH_AS(CyclicComplex(8, {DifferenceCycle({1, 3, 1, 3}), DifferenceCycle({3, 1, 3, 1})}),
                       doctest::Contains("not disjoint"), Error);
  const auto u = CyclicComplex::from_union(8, {DifferenceCycle({1, 3, 1, 3}), DifferenceCycle({3, 1, 3, 1})});
  CHECK(u.size() == 1);
  CHECK(u.facet_count() == 4);
  CHECK_THROWS_AS(CyclicComplex(9, {DifferenceCycle({1, 3, 1, 3})}), Error);
}

TEST_CASE("expand and compress are inverse") {
  for (int n = 6; n <= 15; ++n) {
    const auto cc = cyclic_polytope_boundary(n);
    CHECK(compress(expand(cc), n) == cc);
  }
  const SimplicialComplex not_invariant(6, {{0, 1, 2, 3}});
  CHECK_THROWS_AS(compress(not_invariant, 6), Error);
}

TEST_CASE("cyclic polytope boundary against Gale evenness") {
  for (int n = 5; n <= 14; ++n) {
    const auto c = expand(cyclic_polytope_boundary(n));
    std::set<std::vector<int>> gale;
    const auto g = gale_facets(n);
    for (const auto& f : g.facets()) gale.insert(std::vector<int>(f.begin(), f.end()));
    CHECK(facet_set(c) == gale);
    for (const auto& f : gale) CHECK(gale_even(f, n));
    CHECK(c.facet_count() == static_cast<std::size_t>(n * (n - 3) / 2));
  }
  CHECK(cyclic_polytope_boundary(9).size() == 3);
  CHECK_THROWS_AS(gale_facets(4), Error);
}

TEST_CASE("multipliers against brute force") {
  for (int n = 6; n <= 13; ++n) {
    const auto cc = cyclic_polytope_boundary(n);
    const auto facets = facet_set(expand(cc));
    std::vector<int> brute;
    for (int l = 1; l < n; ++l) {
      if (std::gcd(l, n) != 1) continue;
      std::set<std::vector<int>> img;
      for (const auto& f : facets) {
        std::vector<int> g;
        for (int v : f) g.push_back(v * l % n);
        std::sort(g.begin(), g.end());
        img.insert(g);
      }
      if (img == facets) brute.push_back(l);
    }
    CHECK(multipliers(cc) == brute);
    CHECK(scale(cc, n - 1) == cc);
  }
  CHECK_THROWS_AS(scale(cyclic_polytope_boundary(8), 2), Error);
}

TEST_CASE("solid torus split of the cyclic polytope boundary") {
  for (int n = 7; n <= 14; ++n) {
    for (int l = 1; l <= (n - 1) / 2 - 2; ++l) {
      const auto [a, b] = torus_decomposition(n, l);
      const auto whole = cyclic_polytope_boundary(n);
      CHECK(a.size() + b.size() == whole.size());
      for (const auto& d : a.cycles()) CHECK(whole.contains(d));
      for (const auto& d : b.cycles()) CHECK(whole.contains(d));
      const auto ea = solid_torus_evidence(expand(a));
      const auto eb = solid_torus_evidence(expand(b));
      CHECK(ea.holds());
      CHECK(eb.holds());
      CHECK(ea.components == 1);
    }
  }
  CHECK_THROWS_AS(torus_decomposition(10, 0), Error);
  CHECK_THROWS_AS(torus_decomposition(10, 3), Error);
  CHECK(torus_decomposition(9, 1).second.size() == 2);
}

TEST_CASE("vertex-0 manifold check on cyclic complexes") {
  CHECK(is_combinatorial_3_manifold(cyclic_polytope_boundary(12)).is_manifold);
  const CyclicComplex bad(8, {DifferenceCycle({1, 2, 3, 2}), DifferenceCycle({1, 3, 1, 3})});
  CHECK_FALSE(is_combinatorial_3_manifold(bad).is_manifold);
}
