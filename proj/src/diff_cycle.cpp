#include "cyclotri/diff_cycle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyclotri/collapse.hpp"
#include "cyclotri/error.hpp"
#include "cyclotri/homology.hpp"
#include "cyclotri/parallel.hpp"

namespace cyclotri {

DifferenceCycle::DifferenceCycle(std::vector<int> entries) {
  if (entries.empty()) throw Error("empty difference cycle");
  for (int e : entries) {
    if (e <= 0) throw Error("difference cycle entries must be positive");
  }
  const std::size_t len = entries.size();
  std::vector<int> best = entries, rot(len);
  std::size_t period = len;
  for (std::size_t s = 1; s < len; ++s) {
    for (std::size_t i = 0; i < len; ++i) rot[i] = entries[(i + s) % len];
    if (rot == entries && period == len) period = s;
    if (rot < best) best = rot;
  }
  entries_ = std::move(best);
  n_ = std::accumulate(entries_.begin(), entries_.end(), 0);
  orbit_length_ = std::accumulate(entries_.begin(), entries_.begin() + static_cast<long>(period), 0);
}

Simplex DifferenceCycle::base_simplex() const {
  std::vector<Vertex> v;
  v.reserve(entries_.size());
  int s = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    v.push_back(s);
    s += entries_[i];
  }
  return Simplex(std::move(v));
}

std::vector<Simplex> DifferenceCycle::orbit() const {
  const Simplex base = base_simplex();
  std::vector<Simplex> out;
  out.reserve(static_cast<std::size_t>(orbit_length_));
  std::vector<Vertex> buf(base.size());
  for (int j = 0; j < orbit_length_; ++j) {
    for (std::size_t i = 0; i < base.size(); ++i) buf[i] = (base[i] + j) % n_;
    out.push_back(Simplex::from_unsorted(buf));
  }
  return out;
}

std::string DifferenceCycle::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ':';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

DifferenceCycle canonicalize(std::vector<int> entries) { return DifferenceCycle(std::move(entries)); }

DifferenceCycle difference_cycle_of(const Simplex& s, int n) {
  if (s.empty()) throw Error("difference cycle of the empty simplex");
  if (s.back() >= n) throw Error("vertex " + std::to_string(s.back()) + " not below n");
  std::vector<int> d;
  for (std::size_t i = 1; i < s.size(); ++i) d.push_back(s[i] - s[i - 1]);
  d.push_back(n - s.back() + s.front());
  return DifferenceCycle(std::move(d));
}

CyclicComplex::CyclicComplex(int n, std::vector<DifferenceCycle> cycles)
    : n_(n), cycles_(std::move(cycles)) {
  if (n <= 0) throw Error("vertex count must be positive");
  for (const auto& d : cycles_) {
    if (d.vertex_count() != n) {
      throw Error("cycle " + d.to_string() + " does not sum to " + std::to_string(n));
    }
    if (d.dimension() != cycles_.front().dimension()) {
      throw Error("cycles of different dimensions");
    }
  }
  std::sort(cycles_.begin(), cycles_.end());
  auto dup = std::adjacent_find(cycles_.begin(), cycles_.end());
  if (dup != cycles_.end()) throw Error("cycles not disjoint: " + dup->to_string());
}

CyclicComplex CyclicComplex::from_union(int n, std::vector<DifferenceCycle> cycles) {
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  return CyclicComplex(n, std::move(cycles));
}

bool CyclicComplex::contains(const DifferenceCycle& d) const {
  return std::binary_search(cycles_.begin(), cycles_.end(), d);
}

std::size_t CyclicComplex::facet_count() const {
  std::size_t total = 0;
  for (const auto& d : cycles_) total += static_cast<std::size_t>(d.orbit_length());
  return total;
}

SimplicialComplex expand(const CyclicComplex& cc) {
  std::vector<std::vector<Simplex>> orbits(cc.size());
  parallel_for(cc.size(), [&](std::size_t i) { orbits[i] = cc.cycles()[i].orbit(); });
  std::vector<Simplex> facets;
  facets.reserve(cc.facet_count());
  for (auto& o : orbits) facets.insert(facets.end(), o.begin(), o.end());
  SimplicialComplex c(cc.n(), std::move(facets));
  if (c.facet_count() != cc.facet_count()) throw InternalError("cycles not disjoint");
  return c;
}

CyclicComplex compress(const SimplicialComplex& c, int n) {
  if (c.label_bound() > n) {
    throw Error("complex has labels beyond " + std::to_string(n - 1));
  }
  if (!c.is_pure()) throw Error("compress needs a pure complex");
  const auto facets = c.facets();
  std::vector<DifferenceCycle> cycles;
  std::vector<Vertex> buf;
  for (const auto& f : facets) {
    buf.clear();
    for (Vertex v : f) buf.push_back((v + 1) % n);
    const Simplex shifted = Simplex::from_unsorted(buf);
    if (!std::binary_search(facets.begin(), facets.end(), shifted)) {
      throw Error("not invariant under v -> v+1: image of " + f.to_string() + " absent");
    }
    cycles.push_back(difference_cycle_of(f, n));
  }
  return CyclicComplex::from_union(n, std::move(cycles));
}

CyclicComplex scale(const CyclicComplex& cc, int lambda) {
  const int n = cc.n();
  lambda = ((lambda % n) + n) % n;
  if (std::gcd(lambda, n) != 1) throw Error(std::to_string(lambda) + " is not a unit mod n");
  std::vector<DifferenceCycle> out;
  std::vector<Vertex> buf;
  for (const auto& d : cc.cycles()) {
    buf.clear();
    for (Vertex v : d.base_simplex()) {
      buf.push_back(static_cast<Vertex>((static_cast<long long>(v) * lambda) % n));
    }
    out.push_back(difference_cycle_of(Simplex::from_unsorted(buf), n));
  }
  return CyclicComplex(n, std::move(out));
}

std::vector<int> multipliers(const CyclicComplex& cc) {
  std::vector<int> out;
  const int n = cc.n();
  if (n == 1) return {0};
  for (int lambda = 1; lambda < n; ++lambda) {
    if (std::gcd(lambda, n) == 1 && scale(cc, lambda) == cc) out.push_back(lambda);
  }
  return out;
}

SimplicialComplex gale_facets(int n) {
  if (n < 5) throw Error("Gale evenness enumeration needs n >= 5");
  std::vector<Simplex> facets;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::vector<char> in(static_cast<std::size_t>(n), 0);
          in[a] = in[b] = in[c] = in[d] = 1;
          bool even = true;
          for (int i = 0; i < n && even; ++i) {
            if (in[i]) continue;
            for (int j = i + 1; j < n && even; ++j) {
              if (in[j]) continue;
              int between = 0;
              for (int x = i + 1; x < j; ++x) between += in[x];
              even = between % 2 == 0;
            }
          }
          if (even) facets.push_back(Simplex{a, b, c, d});
        }
  return SimplicialComplex(n, std::move(facets));
}

CyclicComplex cyclic_polytope_boundary(int n) {
  if (n < 5) throw Error("cyclic polytope boundary needs n >= 5");
  std::vector<DifferenceCycle> cycles;
  for (int i = 1; i <= n / 2; ++i) cycles.emplace_back(std::vector<int>{1, i, 1, n - 2 - i});
  return CyclicComplex::from_union(n, std::move(cycles));
}

std::pair<CyclicComplex, CyclicComplex> torus_decomposition(int n, int l) {
  // At l = (n-1)/2 - 1 the second part is empty, repeats a cycle of the
  // first, or is the pinched short cycle; none of these is a solid torus.
  if (n < 7) throw Error("solid torus split needs n >= 7");
  if (l < 1 || l > (n - 1) / 2 - 2) {
    throw Error("l = " + std::to_string(l) + " outside 1.." + std::to_string((n - 1) / 2 - 2));
  }
  std::vector<DifferenceCycle> a, b;
  for (int i = 1; i <= l; ++i) a.emplace_back(std::vector<int>{1, i, 1, n - 2 - i});
  CyclicComplex A = CyclicComplex::from_union(n, std::move(a));
  for (int i = l + 1; i <= n / 2; ++i) {
    DifferenceCycle d(std::vector<int>{1, i, 1, n - 2 - i});
    if (!A.contains(d)) b.push_back(std::move(d));
  }
  return {A, CyclicComplex::from_union(n, std::move(b))};
}

SolidTorusEvidence solid_torus_evidence(const SimplicialComplex& c) {
  SolidTorusEvidence ev;
  const auto comps = connected_components(c);
  ev.components = static_cast<int>(comps.size());
  if (comps.empty()) return ev;
  ev.circle_homology = ev.torus_boundary = ev.collapses_to_curve = true;
  HomologyGroups circle;
  circle.groups = {HomologyGroup{1, {}}, HomologyGroup{1, {}}, HomologyGroup{}, HomologyGroup{}};
  for (const auto& comp : comps) {
    if (comp.dimension() != 3) {
      ev.circle_homology = ev.torus_boundary = false;
    } else {
      if (!(homology_groups(comp) == circle)) ev.circle_homology = false;
      try {
        if (!identify_closed_surface(boundary_complex(comp)).is_torus()) ev.torus_boundary = false;
      } catch (const Error&) {
        ev.torus_boundary = false;
      }
    }
    if (greedy_collapse(comp).dimension() > 1) ev.collapses_to_curve = false;
  }
  return ev;
}

ManifoldReport is_combinatorial_3_manifold(const CyclicComplex& cc) {
  return is_combinatorial_3_manifold(expand(cc), LinkScope::vertex_zero);
}

}  // namespace cyclotri
