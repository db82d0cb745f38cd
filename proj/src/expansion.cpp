#include "cyclotri/expansion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cyclotri/error.hpp"

namespace cyclotri {

DifferenceCycle short_cycle(int n) {
  if (n < 4 || n % 2 != 0) throw Error("the short cycle needs an even n >= 4");
  return DifferenceCycle({1, n / 2 - 1, 1, n / 2 - 1});
}

std::vector<int> max_last_rotation(const DifferenceCycle& d) {
  if (d.dimension() != 3) throw Error("expansion works on 3-dimensional cycles");
  const auto e = d.entries();
  const int mx = *std::max_element(e.begin(), e.end());
  std::vector<int> best;
  for (std::size_t s = 0; s < 4; ++s) {
    std::vector<int> rot(4);
    for (std::size_t i = 0; i < 4; ++i) rot[i] = e[(i + s) % 4];
    if (rot[3] == mx && (best.empty() || rot < best)) best = rot;
  }
  return best;
}

std::string ExpandabilityReport::summary() const {
  std::ostringstream os;
  if (expandable) return "expandable";
  os << "not expandable";
  if (!even) return os.str() + ": odd number of vertices";
  if (!short_cycle_present) return os.str() + ": short cycle missing";
  for (const auto& [d, k0] : violators) {
    os << "; " << d.to_string() << " has no entry >= n/2 (k0 = " << k0 << ")";
  }
  return os.str();
}

ExpandabilityReport check_expandable(const CyclicComplex& cc) {
  ExpandabilityReport r;
  const int n = cc.n();
  r.even = n % 2 == 0 && n >= 4;
  if (!r.even) return r;
  const DifferenceCycle sc = short_cycle(n);
  r.short_cycle_present = cc.contains(sc);
  for (const auto& d : cc.cycles()) {
    if (d == sc) continue;
    const auto rot = max_last_rotation(d);
    if (rot[3] < n / 2) r.violators.emplace_back(d, rot[0] + rot[1] + rot[2] - n / 2);
  }
  r.expandable = r.short_cycle_present && r.violators.empty();
  return r;
}

ExpansionFamily ExpansionFamily::decompose(const CyclicComplex& cc) {
  const int n = cc.n();
  if (n % 2 != 0) throw Error("expansion needs an even number of vertices");
  const DifferenceCycle sc = short_cycle(n);
  if (!cc.contains(sc)) throw Error("short cycle " + sc.to_string() + " missing");
  ExpansionFamily fam;
  fam.n_ = n;
  fam.base_ = cc;
  for (const auto& d : cc.cycles()) {
    if (d != sc) fam.ordinary_.push_back(max_last_rotation(d));
  }
  return fam;
}

ExpansionFamily ExpansionFamily::from(const CyclicComplex& cc) {
  ExpansionFamily fam = decompose(cc);
  if (!fam.satisfies_criterion()) {
    throw Error("expansion criterion violated: " + check_expandable(cc).summary());
  }
  return fam;
}

bool ExpansionFamily::satisfies_criterion() const {
  return std::all_of(ordinary_.begin(), ordinary_.end(),
                     [&](const std::vector<int>& d) { return d[0] + d[1] + d[2] <= n_ / 2; });
}

namespace {

std::vector<DifferenceCycle> expansion_cycles(const ExpansionFamily& fam, int k) {
  if (k < 0) throw Error("negative expansion step; use the contraction instead");
  const int n = fam.n(), m = n + k;
  std::vector<DifferenceCycle> cycles;
  for (const auto& d : fam.ordinary()) cycles.emplace_back(std::vector<int>{d[0], d[1], d[2], d[3] + k});
  for (int l = n / 2; l <= m / 2; ++l) cycles.emplace_back(std::vector<int>{1, l - 1, 1, m - l - 1});
  return cycles;
}

}  // namespace

CyclicComplex expand_family(const ExpansionFamily& fam, int k) {
  if (!fam.satisfies_criterion()) throw Error("family violates the expansion criterion");
  return CyclicComplex(fam.n() + k, expansion_cycles(fam, k));
}

CyclicComplex forced_expansion(const ExpansionFamily& fam, int k) {
  return CyclicComplex::from_union(fam.n() + k, expansion_cycles(fam, k));
}

Contraction contract_once(const ExpansionFamily& fam) {
  std::vector<DifferenceCycle> cycles;
  for (const auto& d : fam.ordinary()) {
    if (d[3] < 2) throw Error("contraction would create a zero entry");
    cycles.emplace_back(std::vector<int>{d[0], d[1], d[2], d[3] - 1});
  }
  Contraction out;
  out.complex = CyclicComplex::from_union(fam.n() - 1, std::move(cycles));
  try {
    out.manifold = is_combinatorial_3_manifold(out.complex);
  } catch (const Error& e) {
    out.manifold.is_manifold = false;
    out.manifold.links.push_back({0, false, e.what()});
    out.manifold.first_failing = 0;
  }
  return out;
}

std::vector<CyclicComplex> short_cycle_manifolds(int n, std::size_t limit) {
  if (n < 6 || n % 2 != 0) throw Error("short-cycle search needs an even n >= 6");
  // All canonical tetrahedron and triangle orbits.
  std::vector<DifferenceCycle> tets;
  for (int a = 1; a < n; ++a)
    for (int b = 1; a + b < n; ++b)
      for (int c = 1; a + b + c < n; ++c) tets.emplace_back(std::vector<int>{a, b, c, n - a - b - c});
  std::sort(tets.begin(), tets.end());
  tets.erase(std::unique(tets.begin(), tets.end()), tets.end());

  std::map<DifferenceCycle, int> triangle_id;
  std::vector<int> triangle_len;
  // faces[i] holds (triangle orbit t, w): every triangle of t lies in
  // w = len(D) * mult / len(t) tetrahedra of orbit i.
  std::vector<std::vector<std::pair<int, int>>> faces(tets.size());
  std::vector<char> usable(tets.size(), 1);
  for (std::size_t i = 0; i < tets.size(); ++i) {
    const auto e = tets[i].entries();
    std::map<int, int> mult;
    for (std::size_t j = 0; j < 4; ++j) {
      // Dropping vertex j+1 of the base simplex merges entries j and j+1.
      std::vector<int> t;
      for (std::size_t x = 0; x < 4; ++x) {
        if (x == (j + 1) % 4) continue;
        t.push_back(x == j ? e[j] + e[(j + 1) % 4] : e[x]);
      }
      DifferenceCycle tc(std::move(t));
      auto [it, fresh] = triangle_id.emplace(tc, static_cast<int>(triangle_len.size()));
      if (fresh) triangle_len.push_back(tc.orbit_length());
      ++mult[it->second];
    }
    for (const auto& [t, m] : mult) {
      const int w = tets[i].orbit_length() * m / triangle_len[static_cast<std::size_t>(t)];
      if (w > 2) usable[i] = 0;
      faces[i].emplace_back(t, w);
    }
  }

  const DifferenceCycle sc = short_cycle(n);
  const std::size_t start = static_cast<std::size_t>(
      std::lower_bound(tets.begin(), tets.end(), sc) - tets.begin());
  std::vector<int> count(triangle_len.size(), 0);
  std::vector<char> chosen(tets.size(), 0);
  std::vector<std::size_t> stack;
  std::vector<CyclicComplex> out;

  auto apply = [&](std::size_t i, int sign) {
    for (const auto& [t, w] : faces[i]) count[static_cast<std::size_t>(t)] += sign * w;
    chosen[i] = sign > 0;
  };
  auto fits = [&](std::size_t i) {
    if (!usable[i] || chosen[i]) return false;
    for (const auto& [t, w] : faces[i]) {
      if (count[static_cast<std::size_t>(t)] + w > 2) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self) -> void {
    if (limit && out.size() >= limit) return;
    int open = -1;
    for (std::size_t t = 0; t < count.size(); ++t) {
      if (count[t] == 1) {
        open = static_cast<int>(t);
        break;
      }
    }
    if (open < 0) {
      std::vector<DifferenceCycle> cycles;
      for (std::size_t i : stack) cycles.push_back(tets[i]);
      CyclicComplex cc(n, std::move(cycles));
      if (is_combinatorial_3_manifold(cc).is_manifold) out.push_back(std::move(cc));
      return;
    }
    for (std::size_t i = 0; i < tets.size(); ++i) {
      if (!fits(i)) continue;
      bool covers = false;
      for (const auto& [t, w] : faces[i]) covers = covers || (t == open && w == 1);
      if (!covers) continue;
      apply(i, 1);
      stack.push_back(i);
      self(self);
      stack.pop_back();
      apply(i, -1);
    }
  };
  if (!fits(start)) return out;
  apply(start, 1);
  stack.push_back(start);
  recurse(recurse);
  return out;
}

std::optional<ViolatingFamily> find_violating_family(int max_n) {
  for (int n = 6; n <= max_n; n += 2) {
    for (const auto& cc : short_cycle_manifolds(n)) {
      const ExpandabilityReport report = check_expandable(cc);
      if (report.violators.empty()) continue;
      const ExpansionFamily fam = ExpansionFamily::decompose(cc);
      for (const auto& [violator, k0] : report.violators) {
        std::vector<int> steps{k0};
        for (int k = 1; k <= 6; ++k) {
          if (k != k0) steps.push_back(k);
        }
        for (int k : steps) {
          if (k < 1) continue;
          const CyclicComplex forced = forced_expansion(fam, k);
          ManifoldReport mr;
          try {
            mr = is_combinatorial_3_manifold(forced);
          } catch (const Error& e) {
            mr.is_manifold = false;
            mr.first_failing = 0;
            mr.links.push_back({0, false, e.what()});
          }
          if (!mr.is_manifold) return ViolatingFamily{cc, violator, k, forced, mr};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace cyclotri
