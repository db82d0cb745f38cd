#include "cyclotri/mpqr.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclotri/error.hpp"

namespace cyclotri {

namespace {

// g = gcd(a, b) = a*x + b*y.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long long x1 = 0, y1 = 0;
  const long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<int> interior(const VertexPath& p) {
  return std::vector<int>(p.vertices.begin(), p.vertices.end() - (p.closed() ? 1 : 0));
}

}  // namespace

EuclidRun subtractive_euclid(int larger_by_convention, int other) {
  EuclidRun run;
  int a = larger_by_convention, b = other;
  if (a <= 0 || b <= 0) throw Error("subtractive Euclid needs positive arguments");
  if (b >= a) {
    std::swap(a, b);
    run.swapped = true;
  }
  run.steps.emplace_back(a, b);
  while (a != b) {
    if (a > b) a -= b;
    else std::tie(a, b) = std::pair(b - a, a);
    run.steps.emplace_back(a, b);
  }
  return run;
}

MpqrParams derive_params(int p, int q, int r) {
  if (p < 2 || q <= p) throw Error("need 2 <= p < q");
  if (std::gcd(p, q) != 1) throw Error("p and q must be coprime");
  if (r < 0) throw Error("r must be non-negative");
  MpqrParams P;
  P.p = p;
  P.q = q;
  P.r = r;
  P.n = 2 * p * q + r;
  // m = p^{-1} mod q, then k = (mp - 1) / q.
  long long x = 0, y = 0;
  ext_gcd(p, q, x, y);
  P.m = static_cast<int>(((x % q) + q) % q);
  P.k = (P.m * p - 1) / q;
  if (P.m < 1 || P.m > q - 1 || P.k < 1 || P.k > p - 1 || P.m * p - P.k * q != 1) {
    throw InternalError("no solution of mp - kq = 1 in range");
  }
  P.a = std::gcd(p, r);
  P.b = std::gcd(q, r);
  P.euclid1 = subtractive_euclid((p - P.k) * q, P.k * q);
  P.euclid2 = subtractive_euclid((q - P.m) * p, P.m * p);
  if (P.euclid1.steps.back() != std::pair(q, q) || P.euclid2.steps.back() != std::pair(p, p)) {
    throw InternalError("Euclid run ended at the wrong divisor");
  }
  return P;
}

CyclicComplex build_B(const MpqrParams& P) {
  const int kq = P.k * P.q, qmp = (P.q - P.m) * P.p, big = P.p * P.q + P.r;
  return CyclicComplex(P.n, {DifferenceCycle({1, kq, qmp, big}), DifferenceCycle({1, kq, big, qmp}),
                             DifferenceCycle({1, big, kq, qmp})});
}

CyclicComplex build_F(const MpqrParams& P, int which) {
  const int pq = P.p * P.q;
  std::vector<DifferenceCycle> cycles;
  if (which == 1 || which == 2) {
    const EuclidRun& run = which == 1 ? P.euclid1 : P.euclid2;
    // The pairs after each step; the initial pair is already the boundary of B.
    for (std::size_t i = 1; i < run.steps.size(); ++i) {
      const auto [a, b] = run.steps[i];
      cycles.emplace_back(std::vector<int>{b, a, b, 2 * pq - 2 * b - a + P.r});
    }
  } else if (which == 3) {
    if (P.r == 0) {
      cycles.emplace_back(std::vector<int>{1, pq - 1, 1, pq - 1});
    } else {
      for (int i = 0; i <= P.r / 2 + 1; ++i) cycles.emplace_back(std::vector<int>{1, pq - 1 + i, 1, pq - 1 + P.r - i});
    }
  } else {
    throw Error("fibre index must be 1, 2 or 3");
  }
  return CyclicComplex::from_union(P.n, std::move(cycles));
}

CyclicComplex build_M(const MpqrParams& P) {
  std::vector<DifferenceCycle> all;
  for (const auto& part : {build_B(P), build_F(P, 1), build_F(P, 2), build_F(P, 3)}) {
    all.insert(all.end(), part.cycles().begin(), part.cycles().end());
  }
  try {
    return CyclicComplex(P.n, std::move(all));
  } catch (const Error& e) {
    throw InternalError(std::string("M(p,q,r) construction: ") + e.what());
  }
}

CyclicComplex build_M(int p, int q, int r) { return build_M(derive_params(p, q, r)); }

std::string MeridianCheck::failures() const {
  std::vector<std::string> f;
  if (!closed) f.push_back("not closed");
  if (!simple) f.push_back("not simple");
  if (!in_boundary) f.push_back("not in the boundary");
  if (!null_in_component) f.push_back("not null-homologous in its solid torus");
  if (!nontrivial_in_boundary) f.push_back("null-homologous in the boundary torus");
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + f[i];
  return out;
}

MeridianCheck check_meridian(const SimplicialComplex& component, const VertexPath& path) {
  MeridianCheck c;
  c.closed = path.closed() && path.vertices.size() >= 4;
  const auto inner = interior(path);
  c.simple = std::set<int>(inner.begin(), inner.end()).size() == inner.size();
  const SimplicialComplex bd = boundary_complex(component);
  c.in_boundary = c.closed;
  for (std::size_t i = 0; c.in_boundary && i + 1 < path.vertices.size(); ++i) {
    const Vertex a = path.vertices[i], b = path.vertices[i + 1];
    c.in_boundary = a != b && bd.contains_face(Simplex{std::min(a, b), std::max(a, b)});
  }
  if (!c.in_boundary) return c;
  c.null_in_component = FirstHomology::of(component)->path_to_cycle(path).is_zero();
  // The boundary may have several components; use the one the path lies in.
  for (const auto& piece : connected_components(bd)) {
    if (piece.vertices().end() != std::find(piece.vertices().begin(), piece.vertices().end(), path.vertices[0])) {
      c.nontrivial_in_boundary = !FirstHomology::of(piece)->path_to_cycle(path).is_zero();
    }
  }
  return c;
}

namespace {

const SimplicialComplex& component_of(const std::vector<SimplicialComplex>& comps, Vertex v) {
  for (const auto& c : comps) {
    if (std::binary_search(c.vertices().begin(), c.vertices().end(), v)) return c;
  }
  throw InternalError("vertex " + std::to_string(v) + " lies in no component");
}

}  // namespace

std::vector<MeridianPath> meridian_paths(const MpqrParams& P) {
  std::vector<MeridianPath> out;
  const int n = P.n, pq = P.p * P.q;
  auto mod = [&](long long x) { return static_cast<Vertex>(((x % n) + n) % n); };

  // Fibre 1 steps by the smaller of kq and (p-k)q, fibre 2 by the smaller of
  // mp and (q-m)p.
  struct Fibre {
    int fibre, step, count, back, copies;
  };
  const int kappa = std::min(P.k, P.p - P.k), mu = std::min(P.m, P.q - P.m);
  const Fibre fibres[] = {{1, kappa * P.q, P.p, kappa, P.b}, {2, mu * P.p, P.q, mu, P.a}};
  for (const Fibre& s : fibres) {
    const auto comps = connected_components(expand(build_F(P, s.fibre)));
    // For p = 2 the first Euclid run starts at (q, q) and F1 is empty.
    if (comps.empty()) continue;
    for (int i = 0; i < s.copies; ++i) {
      MeridianPath m;
      m.fibre = s.fibre;
      m.component = i;
      for (int j = 0; j <= s.count; ++j) m.path.vertices.push_back(mod(i + static_cast<long long>(j) * s.step));
      for (int j = s.back - 1; j >= 0; --j) m.path.vertices.push_back(mod(i + static_cast<long long>(j) * pq));
      m.check = check_meridian(component_of(comps, i), m.path);
      out.push_back(std::move(m));
    }
  }
  if (P.r > 0) {
    MeridianPath m;
    m.fibre = 3;
    m.path.vertices.push_back(0);
    for (int v = pq; v <= pq + P.r; ++v) m.path.vertices.push_back(mod(v));
    m.path.vertices.push_back(0);
    m.check = check_meridian(expand(build_F(P, 3)), m.path);
    out.push_back(std::move(m));
  }
  for (const auto& m : out) {
    if (!m.check.passed()) {
      throw Error("meridian " + m.path.to_string() + " of fibre " + std::to_string(m.fibre) + ": " +
                  m.check.failures());
    }
  }
  return out;
}

HomologyGroups expected_homology(int p, int q, int r) {
  derive_params(p, q, r);
  const int a = std::gcd(p, r), b = std::gcd(q, r);
  std::vector<Integer> orders;
  for (int i = 0; i < b - 1; ++i) orders.emplace_back(p / a);
  for (int i = 0; i < a - 1; ++i) orders.emplace_back(q / b);
  const long long free = static_cast<long long>(a - 1) * (b - 1);
  HomologyGroups h;
  h.groups = {HomologyGroup{1, {}}, HomologyGroup{free, invariant_factors_of(orders)}, HomologyGroup{free, {}},
              HomologyGroup{1, {}}};
  return h;
}

std::string SeifertData::to_string() const {
  std::ostringstream os;
  if (!connected_sum.empty()) return connected_sum;
  os << "SFS [genus " << base_genus << ":";
  for (std::size_t i = 0; i < fibres.size(); ++i) {
    os << (i ? "," : "") << " (" << fibres[i].alpha << "," << fibres[i].beta << ")";
    if (fibres[i].multiplicity != 1) os << "^" << fibres[i].multiplicity;
  }
  os << "]";
  return os.str();
}

SeifertData expected_seifert(int p, int q, int r) {
  derive_params(p, q, r);
  SeifertData s;
  s.p = p;
  s.q = q;
  s.r = r;
  s.a = std::gcd(p, r);
  s.b = std::gcd(q, r);
  s.base_genus = (s.a - 1) * (s.b - 1) / 2;
  if (r == 0) {
    s.connected_sum = "(S^2 x S^1)^#" + std::to_string((p - 1) * (q - 1));
    s.residual = 0;
    return s;
  }
  const long long A = static_cast<long long>(q) * r, B = static_cast<long long>(p) * r,
                  C = static_cast<long long>(p) * q, target = static_cast<long long>(s.a) * s.b;
  long long x = 0, y = 0, u = 0, v = 0;
  const long long g1 = ext_gcd(A, B, x, y);  // A x + B y = g1
  const long long g = ext_gcd(g1, C, u, v);  // g1 u + C v = g
  if (target % g != 0) throw InternalError("fibre-type equation has no solution");
  const long long scale = target / g;
  long long b1 = x * u * scale, b2 = -y * u * scale, b3 = v * scale;
  const long long pa = p / s.a, qb = q / s.b;
  const long long d1 = floor_div(b1, pa);
  b1 -= d1 * pa;
  b3 += d1 * (r / s.a);
  const long long d2 = floor_div(b2, qb);
  b2 -= d2 * qb;
  b3 -= d2 * (r / s.b);
  s.b1 = static_cast<int>(b1);
  s.b2 = static_cast<int>(b2);
  s.b3 = static_cast<int>(b3);
  auto big = [](long long x) { return Integer(static_cast<long>(x)); };
  s.residual = big(A) * big(b1) - big(B) * big(b2) + big(C) * big(b3) - big(target);
  s.fibres = {{-p / s.a, s.b1, s.b}, {q / s.b, s.b2, s.a}, {-r / (s.a * s.b), s.b3, 1}};
  return s;
}

ShiftAction shift_action(int q, int k) {
  if (q < 3) throw Error("q must be an odd prime");
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) throw Error("q must be an odd prime");
  }
  if (k < 0) throw Error("k must be non-negative");
  const CyclicComplex cc = build_M(2, q, 2 * k * q);
  const int n = cc.n();
  const auto h1 = FirstHomology::of(expand(cc));
  const HomologyGroup g = h1->group();
  if (!g.torsion.empty() || g.betti != q - 1) {
    throw Error("H_1 is " + g.to_string() + ", expected Z^" + std::to_string(q - 1));
  }
  const std::size_t dim = static_cast<std::size_t>(q - 1);
  ShiftAction out;
  out.q = q;
  out.k = k;
  IntMatrix a(dim, dim), img(dim, dim);
  for (int v = 2; v <= q; ++v) {
    const auto c = h1->path_to_cycle(VertexPath{{v, v - 1, v - 2, v}});
    const auto s = h1->path_to_cycle(VertexPath{{v, v - 1, v - 2, v}}.shifted(1, n));
    for (std::size_t i = 0; i < dim; ++i) {
      a(i, static_cast<std::size_t>(v - 2)) = c.coordinates[i];
      img(i, static_cast<std::size_t>(v - 2)) = s.coordinates[i];
    }
  }
  const Integer det = determinant(a);
  if (det != 1 && det != -1) throw Error("the cycles a_i do not form a basis of H_1");
  out.basis_coordinates = a;
  out.action = unimodular_inverse(a) * img;
  const IntMatrix id = IntMatrix::identity(dim);
  IntMatrix power = out.action;
  for (int t = 1; t <= 4 * q * (k + 2); ++t) {
    if (power == id) {
      out.order = t;
      break;
    }
    power = power * out.action;
  }
  out.maps_to_next = true;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (out.action(j, i) != (j == i + 1 ? 1 : 0)) out.maps_to_next = false;
    }
  }
  return out;
}

std::vector<VertexPath> homology_generating_paths(const MpqrParams& P, const SimplicialComplex& complex) {
  std::vector<VertexPath> out;
  auto add = [&](int v, int len) {
    VertexPath path;
    for (int j = 0; j <= len; ++j) path.vertices.push_back(v - j);
    path.vertices.push_back(v);
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      const Vertex a = path.vertices[i], b = path.vertices[i + 1];
      if (!complex.contains_face(Simplex{std::min(a, b), std::max(a, b)})) return;
    }
    out.push_back(std::move(path));
  };
  for (int v = P.p; v <= P.k * P.q; ++v) add(v, P.p);
  for (int v = P.q; v <= (P.q - P.m) * P.p; ++v) add(v, P.q);
  return out;
}

bool shift_homology_check(int p, int q, int r) {
  const MpqrParams P = derive_params(p, q, r);
  const SimplicialComplex c = expand(build_M(P));
  const auto h1 = FirstHomology::of(c);
  bool ok = true;
  for (const auto& path : homology_generating_paths(P, c)) {
    const CycleClass x = h1->path_to_cycle(path);
    const CycleClass y = h1->path_to_cycle(path.shifted(p * q, P.n));
    ok = ok && are_homologous(x, y);
  }
  return ok;
}

}  // namespace cyclotri
