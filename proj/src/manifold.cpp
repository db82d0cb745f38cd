#include "cyclotri/manifold.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cyclotri/error.hpp"
#include "cyclotri/parallel.hpp"

namespace cyclotri {

namespace {

struct ComponentSurface {
  bool orientable = true;
  long long chi = 0;
};

// Orientation propagation over the dual graph of one closed, connected
// surface.  `edge_triangles` maps each edge to its two triangles.
bool propagate_orientation(const std::vector<Simplex>& triangles,
                           const std::map<Simplex, std::vector<std::size_t>>& edge_triangles) {
  std::vector<int> sign(triangles.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < triangles.size(); ++start) {
    if (sign[start]) continue;
    sign[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t t = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < 3; ++i) {
        const Simplex e = triangles[t].without_index(i);
        const int induced = sign[t] * (i % 2 == 0 ? 1 : -1);
        for (std::size_t u : edge_triangles.at(e)) {
          if (u == t) continue;
          std::size_t j = 0;
          while (triangles[u][j] == e[0] || triangles[u][j] == e[1]) ++j;
          // The neighbour must induce the opposite orientation on e.
          const int want = -induced * (j % 2 == 0 ? 1 : -1);
          if (sign[u] == 0) {
            sign[u] = want;
            stack.push_back(u);
          } else if (sign[u] != want) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

std::string SurfaceType::to_string() const {
  std::ostringstream os;
  if (!connected) os << components << "-component ";
  if (orientable) {
    if (connected && genus == 0) os << "2-sphere";
    else if (connected && genus == 1) os << "torus";
    else os << "orientable surface of genus " << genus;
  } else {
    os << "non-orientable surface with " << genus << " cross-caps";
  }
  os << " (chi = " << euler_characteristic << ")";
  return os.str();
}

SurfaceType identify_closed_surface(const SimplicialComplex& c) {
  if (c.empty()) throw Error("empty complex is not a surface");
  if (c.dimension() != 2 || !c.is_pure()) {
    throw Error("not a pure 2-dimensional complex");
  }
  const auto& triangles = c.facets();
  std::map<Simplex, std::vector<std::size_t>> edge_triangles;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (std::size_t i = 0; i < 3; ++i) edge_triangles[triangles[t].without_index(i)].push_back(t);
  }
  for (const auto& [e, ts] : edge_triangles) {
    if (ts.size() != 2) {
      throw Error("edge " + e.to_string() + " lies in " + std::to_string(ts.size()) +
                  " triangles");
    }
  }
  for (Vertex v : c.vertices()) {
    const SimplicialComplex lk = link(c, v);
    if (connected_components(lk).size() != 1) {
      throw Error("link of vertex " + std::to_string(v) + " is not a single circle");
    }
  }

  SurfaceType s;
  s.closed = true;
  const auto comps = connected_components(c);
  s.components = static_cast<int>(comps.size());
  s.connected = comps.size() == 1;
  s.orientable = true;
  s.euler_characteristic = euler_characteristic(c);
  for (const auto& comp : comps) {
    std::vector<Simplex> tris(comp.facets().begin(), comp.facets().end());
    std::map<Simplex, std::vector<std::size_t>> et;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      for (std::size_t i = 0; i < 3; ++i) et[tris[t].without_index(i)].push_back(t);
    }
    const bool orientable = propagate_orientation(tris, et);
    const long long chi = euler_characteristic(comp);
    if (orientable) {
      s.genus += static_cast<int>((2 - chi) / 2);
    } else {
      s.orientable = false;
      s.genus += static_cast<int>(2 - chi);
    }
  }
  return s;
}

std::string ManifoldReport::summary() const {
  std::ostringstream os;
  if (is_manifold) {
    os << "combinatorial 3-manifold (" << links.size() << " vertex link"
       << (links.size() == 1 ? "" : "s") << " checked)";
  } else {
    os << "not a combinatorial 3-manifold";
    if (first_failing) {
      for (const auto& l : links) {
        if (l.vertex == *first_failing) {
          os << ": link of vertex " << l.vertex << ": " << l.detail;
          break;
        }
      }
    }
  }
  return os.str();
}

ManifoldReport is_combinatorial_3_manifold(const SimplicialComplex& c, LinkScope scope) {
  if (c.empty() || c.dimension() != 3 || !c.is_pure()) {
    throw Error("manifold check needs a pure 3-dimensional complex");
  }
  std::vector<Vertex> targets;
  if (scope == LinkScope::vertex_zero) {
    if (c.vertices().front() != 0) throw Error("vertex 0 does not occur");
    targets.push_back(0);
  } else {
    targets = c.vertices();
  }
  ManifoldReport report;
  report.links.resize(targets.size());
  parallel_for(targets.size(), [&](std::size_t i) {
    VertexLinkResult r;
    r.vertex = targets[i];
    try {
      const SurfaceType s = identify_closed_surface(link(c, targets[i]));
      r.sphere = s.is_sphere();
      r.detail = s.to_string();
    } catch (const Error& e) {
      r.sphere = false;
      r.detail = e.what();
    }
    report.links[i] = std::move(r);
  });
  report.is_manifold = true;
  for (const auto& r : report.links) {
    if (!r.sphere) {
      report.is_manifold = false;
      report.first_failing = r.vertex;
      break;
    }
  }
  return report;
}

}  // namespace cyclotri
