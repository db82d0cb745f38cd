#include <doctest.h>

#include <map>
#include <numeric>

#include "cyclotri/complex.hpp"
#include "cyclotri/diff_cycle.hpp"
#include "cyclotri/error.hpp"
#include "cyclotri/homology.hpp"
#include "cyclotri/mpqr.hpp"

using namespace cyclotri;

namespace {

std::vector<std::pair<int, int>> pairs(std::initializer_list<std::pair<int, int>> l) { return l; }

// Every triangle of the expansion lies in exactly two tetrahedra.
bool closed_pseudomanifold(const SimplicialComplex& c) {
  std::map<Simplex, int> count;
  for (const auto& f : c.facets())
    for (std::size_t i = 0; i < f.size(); ++i) ++count[f.without_index(i)];
  for (const auto& [t, k] : count)
    if (k != 2) return false;
  return true;
}

}  // namespace

TEST_CASE("subtractive Euclid") {
  const auto run = subtractive_euclid(4, 2);
  CHECK_FALSE(run.swapped);
  CHECK(run.steps == pairs({{4, 2}, {2, 2}}));
  const auto sw = subtractive_euclid(6, 15);
  CHECK(sw.swapped);
  CHECK(sw.steps == pairs({{15, 6}, {9, 6}, {3, 6}, {3, 3}}));
  CHECK(subtractive_euclid(3, 3).steps == pairs({{3, 3}}));
  CHECK_THROWS_AS(subtractive_euclid(0, 3), Error);
}

TEST_CASE("parameters") {
  const auto P = derive_params(2, 3, 1);
  CHECK(P.n == 13);
  CHECK(P.m == 2);
  CHECK(P.k == 1);
  CHECK(P.euclid1.steps == pairs({{3, 3}}));
  CHECK(P.euclid2.steps == pairs({{4, 2}, {2, 2}}));
  for (int p = 2; p <= 7; ++p)
    for (int q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto Q = derive_params(p, q, 0);
      CHECK(Q.m * p - Q.k * q == 1);
      CHECK(Q.euclid1.steps.back() == std::pair(q, q));
      CHECK(Q.euclid2.steps.back() == std::pair(p, p));
    }
  CHECK_THROWS_AS(derive_params(2, 4, 1), Error);
  CHECK_THROWS_AS(derive_params(3, 2, 1), Error);
  CHECK_THROWS_AS(derive_params(2, 3, -1), Error);
}

TEST_CASE("building blocks of M(2,3,1)") {
  const auto P = derive_params(2, 3, 1);
  CHECK(build_B(P).size() == 3);
  CHECK(build_B(P).contains(DifferenceCycle({1, 3, 2, 7})));
  CHECK(build_F(P, 1).size() == 0);
  CHECK(build_F(P, 2).cycles()[0] == DifferenceCycle({2, 2, 2, 7}));
  CHECK(build_F(P, 2).size() == 1);
  CHECK(build_F(P, 3).cycles()[0] == DifferenceCycle({1, 5, 1, 6}));
  CHECK(build_F(P, 3).size() == 1);
  CHECK(build_F(derive_params(2, 3, 0), 3).cycles()[0] == DifferenceCycle({1, 5, 1, 5}));
  CHECK_THROWS_AS(build_F(P, 4), Error);
}

TEST_CASE("M(p,q,r) is a closed combinatorial 3-manifold") {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}, {3, 7}, {5, 7}}) {
    for (int r : {0, 1, 2, 5, 9}) {
      const auto m = build_M(p, q, r);
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(r);
      CHECK(m.n() == 2 * p * q + r);
      const auto e = expand(m);
      CHECK(closed_pseudomanifold(e));
      CHECK(is_combinatorial_3_manifold(e).is_manifold);
    }
  }
}

TEST_CASE("homology of small members") {
  CHECK(homology_groups(expand(build_M(2, 3, 2))).to_string() == "(Z, Z_3, 0, Z)");
  CHECK(homology_groups(expand(build_M(2, 3, 5))).to_string() == "(Z, 0, 0, Z)");
  CHECK(homology_groups(expand(build_M(2, 3, 0))).to_string() == "(Z, Z^2, Z^2, Z)");
  CHECK(expected_homology(2, 3, 6).to_string() == "(Z, Z^2, Z^2, Z)");
  CHECK(expected_homology(2, 5, 2).to_string() == "(Z, Z_5, 0, Z)");
}

TEST_CASE("solid tori and meridians") {
  const auto P = derive_params(3, 4, 2);
  const auto f1 = connected_components(expand(build_F(P, 1)));
  const auto f2 = connected_components(expand(build_F(P, 2)));
  CHECK(static_cast<int>(f1.size()) == P.b);
  CHECK(static_cast<int>(f2.size()) == P.a);
  for (const auto& m : meridian_paths(P)) CHECK(m.check.passed());
  const VertexPath not_closed{{0, 12, 13}};
  CHECK_FALSE(check_meridian(expand(build_F(P, 3)), not_closed).closed);
}

TEST_CASE("Seifert invariants") {
  const auto s = expected_seifert(2, 3, 5);
  CHECK(s.b1 == 1);
  CHECK(s.b2 == 2);
  CHECK(s.b3 == 1);
  CHECK(s.residual == 0);
  for (int r = 1; r <= 20; ++r) {
    const auto t = expected_seifert(3, 5, r);
    CHECK(t.residual == 0);
    CHECK(t.b1 >= 0);
    CHECK(t.b1 < 3 / t.a);
    CHECK(t.b2 >= 0);
    CHECK(t.b2 < 5 / t.b);
  }
  CHECK_FALSE(expected_seifert(2, 3, 0).connected_sum.empty());
}

TEST_CASE("shift action on M(2,q,2kq)") {
  const auto a = shift_action(3, 0);
  CHECK(a.order == 6);
  CHECK(a.maps_to_next);
  CHECK(a.action == IntMatrix{{0, -1}, {1, 1}});
  CHECK_THROWS_AS(shift_action(9, 0), Error);
}

TEST_CASE("shifted generating paths stay homologous") {
  CHECK(shift_homology_check(2, 3, 0));
  CHECK(shift_homology_check(2, 5, 2));
  CHECK(shift_homology_check(3, 4, 12));
}
