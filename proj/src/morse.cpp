#include "cyclotri/morse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cyclotri/error.hpp"
#include "cyclotri/f2.hpp"
#include "cyclotri/manifold.hpp"
#include "cyclotri/parallel.hpp"

namespace cyclotri {

RslFunction RslFunction::from_order(std::vector<Vertex> order, int label_bound) {
  RslFunction f;
  f.rank_.assign(static_cast<std::size_t>(label_bound), -1);
  if (order.size() != static_cast<std::size_t>(label_bound)) {
    throw Error("an ordering must list every vertex exactly once");
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= label_bound || f.rank_[static_cast<std::size_t>(v)] >= 0) {
      throw Error("an ordering must list every vertex exactly once");
    }
    f.rank_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  f.order_ = std::move(order);
  return f;
}

RslFunction RslFunction::identity(int label_bound) {
  std::vector<Vertex> order(static_cast<std::size_t>(label_bound));
  std::iota(order.begin(), order.end(), 0);
  return from_order(std::move(order), label_bound);
}

RslFunction RslFunction::random(int label_bound, std::uint64_t seed) {
  std::vector<Vertex> order(static_cast<std::size_t>(label_bound));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  // Fisher-Yates with an explicit draw so the result does not depend on the
  // standard library's shuffle.
  for (std::size_t i = order.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }
  return from_order(std::move(order), label_bound);
}

void RslFunction::swap_adjacent(std::size_t i) {
  std::swap(order_[i], order_[i + 1]);
  rank_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
  rank_[static_cast<std::size_t>(order_[i + 1])] = static_cast<int>(i + 1);
}

std::string MorseVector::to_string() const {
  std::ostringstream os;
  os << '(' << counts[0] << ", " << counts[1] << ", " << counts[2] << ", " << counts[3] << ')';
  return os.str();
}

LinkTable::LinkTable(const SimplicialComplex& c) : complex_(c) {
  links_.resize(static_cast<std::size_t>(c.label_bound()));
  parallel_for(c.vertices().size(), [&](std::size_t idx) {
    const Vertex v = c.vertices()[idx];
    const SimplicialComplex lk = link(c, v);
    Link& out = links_[static_cast<std::size_t>(v)];
    out.vertices = lk.vertices();
    auto local = [&](Vertex w) {
      return static_cast<int>(std::lower_bound(out.vertices.begin(), out.vertices.end(), w) -
                              out.vertices.begin());
    };
    if (lk.dimension() >= 1) {
      for (const auto& e : lk.faces(1)) out.edges.push_back({local(e[0]), local(e[1])});
    }
    if (lk.dimension() >= 2) {
      for (const auto& t : lk.faces(2)) {
        std::array<int, 3> tri{};
        for (std::size_t i = 0; i < 3; ++i) tri[i] = static_cast<int>(lk.face_index(t.without_index(i)));
        out.triangles.push_back(tri);
      }
    }
  });
}

std::array<long long, 4> LinkTable::lower_link_betti(Vertex v, const RslFunction& f) const {
  const Link& lk = links_[static_cast<std::size_t>(v)];
  const int rv = f.rank(v);
  std::vector<int> vmap(lk.vertices.size(), -1), emap(lk.edges.size(), -1);
  int nv = 0, ne = 0;
  for (std::size_t i = 0; i < lk.vertices.size(); ++i) {
    if (f.rank(lk.vertices[i]) < rv) vmap[i] = nv++;
  }
  std::array<long long, 4> out{};
  if (nv == 0) {
    out[0] = 1;
    return out;
  }
  for (std::size_t i = 0; i < lk.edges.size(); ++i) {
    if (vmap[static_cast<std::size_t>(lk.edges[i][0])] >= 0 &&
        vmap[static_cast<std::size_t>(lk.edges[i][1])] >= 0) {
      emap[i] = ne++;
    }
  }
  std::vector<std::size_t> tris;
  for (std::size_t i = 0; i < lk.triangles.size(); ++i) {
    const auto& t = lk.triangles[i];
    if (emap[static_cast<std::size_t>(t[0])] >= 0 && emap[static_cast<std::size_t>(t[1])] >= 0 &&
        emap[static_cast<std::size_t>(t[2])] >= 0) {
      tris.push_back(i);
    }
  }
  BitMatrix d1(static_cast<std::size_t>(ne), static_cast<std::size_t>(nv));
  for (std::size_t i = 0; i < lk.edges.size(); ++i) {
    if (emap[i] < 0) continue;
    d1.set(static_cast<std::size_t>(emap[i]), static_cast<std::size_t>(vmap[static_cast<std::size_t>(lk.edges[i][0])]));
    d1.set(static_cast<std::size_t>(emap[i]), static_cast<std::size_t>(vmap[static_cast<std::size_t>(lk.edges[i][1])]));
  }
  BitMatrix d2(tris.size(), static_cast<std::size_t>(ne));
  for (std::size_t k = 0; k < tris.size(); ++k) {
    for (int e : lk.triangles[tris[k]]) d2.set(k, static_cast<std::size_t>(emap[static_cast<std::size_t>(e)]));
  }
  const long long r1 = static_cast<long long>(f2_rank(std::move(d1)));
  const long long r2 = static_cast<long long>(f2_rank(std::move(d2)));
  out[1] = nv - r1 - 1;
  out[2] = ne - r1 - r2;
  out[3] = static_cast<long long>(tris.size()) - r2;
  return out;
}

std::vector<CriticalPoint> LinkTable::critical_points(const RslFunction& f) const {
  std::vector<CriticalPoint> out;
  for (Vertex v : f.order()) {
    if (links_[static_cast<std::size_t>(v)].vertices.empty()) continue;
    const auto b = lower_link_betti(v, f);
    for (int i = 0; i < 4; ++i) {
      if (b[static_cast<std::size_t>(i)] > 0) out.push_back({v, i, b[static_cast<std::size_t>(i)]});
    }
  }
  std::sort(out.begin(), out.end(), [&](const CriticalPoint& a, const CriticalPoint& b) {
    return f.rank(a.vertex) != f.rank(b.vertex) ? f.rank(a.vertex) < f.rank(b.vertex) : a.index < b.index;
  });
  return out;
}

long long LinkTable::index_one_total(const RslFunction& f) const {
  long long total = 0;
  for (Vertex v : complex_.vertices()) total += lower_link_betti(v, f)[1];
  return total;
}

std::vector<CriticalPoint> critical_points(const SimplicialComplex& c, const RslFunction& f) {
  if (f.label_bound() != c.label_bound()) throw Error("ordering does not match the complex");
  const ManifoldReport report = is_combinatorial_3_manifold(c);
  if (!report.is_manifold) throw Error("critical points need a closed combinatorial 3-manifold: " + report.summary());
  return LinkTable(c).critical_points(f);
}

MorseVector morse_vector(const SimplicialComplex& c, const std::vector<CriticalPoint>& points) {
  MorseVector mv;
  for (const auto& p : points) {
    if (p.index < 0 || p.index > 3) throw InternalError("critical index out of range");
    mv.counts[static_cast<std::size_t>(p.index)] += p.multiplicity;
  }
  const long long chi = euler_characteristic(c);
  if (mv.alternating_sum() != chi) {
    throw InternalError("Morse relation violated: " + mv.to_string() + " against chi = " + std::to_string(chi));
  }
  const auto betti = betti_numbers_f2(c);
  const long long sum = std::accumulate(betti.begin(), betti.end(), 0LL);
  if (mv.total() < sum) {
    throw InternalError("Morse inequality violated: " + mv.to_string() + " below Betti sum " +
                        std::to_string(sum));
  }
  return mv;
}

namespace {

// SplitMix64 step, used to derive independent per-restart seeds.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct RestartResult {
  long long bound = 0;
  RslFunction f = RslFunction::identity(0);
};

RestartResult descend(const LinkTable& table, RslFunction f, int iterations, std::uint64_t seed) {
  const auto& verts = table.complex().vertices();
  std::vector<long long> idx1(static_cast<std::size_t>(f.label_bound()), 0);
  long long total = 0;
  for (Vertex v : verts) {
    idx1[static_cast<std::size_t>(v)] = table.lower_link_betti(v, f)[1];
    total += idx1[static_cast<std::size_t>(v)];
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = f.order().size();
  if (n < 2) return {total, f};
  std::uniform_int_distribution<std::size_t> pick(0, n - 2);
  for (int it = 0; it < iterations; ++it) {
    const std::size_t i = pick(rng);
    const Vertex a = f.order()[i], b = f.order()[i + 1];
    f.swap_adjacent(i);
    // Only the lower links of the two swapped vertices change.
    const long long na = table.lower_link_betti(a, f)[1];
    const long long nb = table.lower_link_betti(b, f)[1];
    const long long next = total - idx1[static_cast<std::size_t>(a)] - idx1[static_cast<std::size_t>(b)] + na + nb;
    if (next <= total) {
      total = next;
      idx1[static_cast<std::size_t>(a)] = na;
      idx1[static_cast<std::size_t>(b)] = nb;
    } else {
      f.swap_adjacent(i);
    }
  }
  return {total, f};
}

}  // namespace

HeegaardBound heegaard_upper_bound(const SimplicialComplex& c, const HeegaardSearchOptions& options) {
  const ManifoldReport report = is_combinatorial_3_manifold(c);
  if (!report.is_manifold) throw Error("Heegaard bound needs a closed combinatorial 3-manifold: " + report.summary());
  const LinkTable table(c);

  HeegaardBound best;
  best.witness = RslFunction::identity(c.label_bound());
  best.genus_bound = table.index_one_total(best.witness);
  best.witness_restart = -1;

  std::vector<RestartResult> results(static_cast<std::size_t>(std::max(options.restarts, 0)));
  parallel_for(results.size(), [&](std::size_t r) {
    const std::uint64_t s = mix_seed(options.seed * 0x100000001b3ull + r);
    results[r] = descend(table, RslFunction::random(c.label_bound(), s), options.iterations, mix_seed(s));
  });
  for (std::size_t r = 0; r < results.size(); ++r) {
    if (results[r].bound < best.genus_bound) {
      best.genus_bound = results[r].bound;
      best.witness = results[r].f;
      best.witness_restart = static_cast<int>(r);
    }
  }
  best.morse = morse_vector(c, table.critical_points(best.witness));
  return best;
}

}  // namespace cyclotri
