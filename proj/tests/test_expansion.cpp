#include <doctest.h>

#include "cyclotri/complex.hpp"
#include "cyclotri/diff_cycle.hpp"
#include "cyclotri/error.hpp"
#include "cyclotri/expansion.hpp"
#include "cyclotri/mpqr.hpp"

using namespace cyclotri;

TEST_CASE("short cycle and max-last rotation") {
  CHECK(short_cycle(10) == DifferenceCycle({1, 4, 1, 4}));
  CHECK(short_cycle(10).orbit_length() == 5);
  CHECK_THROWS_AS(short_cycle(9), Error);
  CHECK(max_last_rotation(DifferenceCycle({1, 5, 2, 3})) == std::vector<int>{2, 3, 1, 5});
  CHECK(max_last_rotation(DifferenceCycle({2, 2, 2, 2})) == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("expandability report") {
  const auto good = check_expandable(cyclic_polytope_boundary(14));
  CHECK(good.expandable);
  CHECK(good.violators.empty());
  CHECK_FALSE(check_expandable(cyclic_polytope_boundary(13)).expandable);
  const auto bad = check_expandable(CyclicComplex(8, {DifferenceCycle({1, 2, 3, 2}), DifferenceCycle({1, 3, 1, 3})}));
  CHECK_FALSE(bad.expandable);
  REQUIRE(bad.violators.size() == 1);
  CHECK(bad.violators[0].second == 1);
}

TEST_CASE("expansion of the cyclic polytope boundary") {
  for (int n : {6, 8, 12}) {
    const auto fam = ExpansionFamily::from(cyclic_polytope_boundary(n));
    for (int k = 0; k <= 5; ++k) {
      const auto e = expand_family(fam, k);
      CHECK(e == cyclic_polytope_boundary(n + k));
      CHECK(is_combinatorial_3_manifold(e).is_manifold);
      CHECK(is_neighbourly(expand(e)));
    }
  }
  CHECK_THROWS_AS(expand_family(ExpansionFamily::from(cyclic_polytope_boundary(8)), -1), Error);
}

TEST_CASE("expansion of M(p,q,r) shifts r") {
  for (auto [p, q, r] : {std::tuple{2, 3, 2}, {2, 5, 4}, {3, 4, 6}}) {
    const auto fam = ExpansionFamily::from(build_M(p, q, r));
    for (int k = 0; k <= 3; ++k) CHECK(expand_family(fam, k) == build_M(p, q, r + k));
  }
}

TEST_CASE("contraction") {
  const auto c = contract_once(ExpansionFamily::from(cyclic_polytope_boundary(12)));
  CHECK(c.complex == cyclic_polytope_boundary(11));
  CHECK(c.manifold.is_manifold);
}

TEST_CASE("forced expansion of a violating family breaks") {
  const CyclicComplex base(8, {DifferenceCycle({1, 2, 3, 2}), DifferenceCycle({1, 3, 1, 3})});
  const auto fam = ExpansionFamily::decompose(base);
  CHECK_FALSE(fam.satisfies_criterion());
  CHECK_THROWS_AS(ExpansionFamily::from(base), Error);
  CHECK_THROWS_AS(expand_family(fam, 1), Error);
  const auto forced = forced_expansion(fam, 1);
  CHECK(forced.n() == 9);
}

TEST_CASE("short-cycle manifold census") {
  const auto found = short_cycle_manifolds(10);
  CHECK_FALSE(found.empty());
  bool has_polytope = false;
  for (const auto& m : found) {
    CHECK(m.contains(short_cycle(10)));
    CHECK(is_combinatorial_3_manifold(expand(m)).is_manifold);
    has_polytope = has_polytope || m == cyclic_polytope_boundary(10);
  }
  CHECK(has_polytope);
  CHECK(short_cycle_manifolds(10, 1).size() == 1);
}

TEST_CASE("violating family search") {
  const auto v = find_violating_family(16);
  REQUIRE(v.has_value());
  CHECK(is_combinatorial_3_manifold(v->base).is_manifold);
  CHECK_FALSE(v->forced_report.is_manifold);
  CHECK(v->forced_report.first_failing.has_value());
  CHECK(v->forced.n() == v->base.n() + v->k0);
}
