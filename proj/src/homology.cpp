#include "cyclotri/homology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "cyclotri/error.hpp"

namespace cyclotri {

std::string HomologyGroup::to_string() const {
  std::vector<std::string> terms;
  if (betti == 1) terms.push_back("Z");
  else if (betti > 1) terms.push_back("Z^" + std::to_string(betti));
  for (const auto& t : torsion) terms.push_back("Z_" + t.get_str());
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
  return out;
}

std::string HomologyGroups::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += ", ";
    out += groups[i].to_string();
  }
  return out + ")";
}

std::vector<SparseRow> boundary_rows(const SimplicialComplex& c, int dim) {
  std::vector<SparseRow> rows;
  if (dim < 1 || dim > c.dimension()) return rows;
  const auto& faces = c.faces(dim);
  const auto& lower = c.faces(dim - 1);
  rows.reserve(faces.size());
  for (const auto& f : faces) {
    SparseRow row;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Simplex g = f.without_index(i);
      auto it = std::lower_bound(lower.begin(), lower.end(), g);
      row.emplace_back(static_cast<int>(it - lower.begin()), Integer(i % 2 == 0 ? 1 : -1));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }
  return rows;
}

HomologyGroups homology_groups(const SimplicialComplex& c, bool reduced) {
  HomologyGroups h;
  const int d = c.dimension();
  if (d < 0) return h;
  // rank[k] = rank of the boundary map out of dimension k; factors of the
  // map out of dimension k+1 give the torsion in dimension k.
  std::vector<std::size_t> rank(static_cast<std::size_t>(d + 2), 0);
  std::vector<std::vector<Integer>> torsion(static_cast<std::size_t>(d + 1));
  for (int k = 1; k <= d; ++k) {
    PresentationReduction red(static_cast<int>(c.faces(k - 1).size()), boundary_rows(c, k), false);
    rank[static_cast<std::size_t>(k)] = red.rank();
    torsion[static_cast<std::size_t>(k - 1)] = red.torsion();
  }
  if (reduced) rank[0] = 1;
  for (int k = 0; k <= d; ++k) {
    HomologyGroup g;
    g.betti = static_cast<long long>(c.faces(k).size()) -
              static_cast<long long>(rank[static_cast<std::size_t>(k)]) -
              static_cast<long long>(rank[static_cast<std::size_t>(k + 1)]);
    g.torsion = torsion[static_cast<std::size_t>(k)];
    h.groups.push_back(std::move(g));
  }
  return h;
}

VertexPath VertexPath::shifted(int x, int n) const {
  VertexPath p;
  for (Vertex v : vertices) p.vertices.push_back(static_cast<Vertex>(((v + x) % n + n) % n));
  return p;
}

std::string VertexPath::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) os << ',';
    os << vertices[i];
  }
  os << '>';
  return os.str();
}

bool CycleClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Integer& x) { return x == 0; });
}

std::shared_ptr<const FirstHomology> FirstHomology::of(const SimplicialComplex& c) {
  return std::shared_ptr<const FirstHomology>(new FirstHomology(c));
}

FirstHomology::FirstHomology(const SimplicialComplex& c) : complex_(c) {
  edges_ = c.faces(1);
  const std::size_t nv = static_cast<std::size_t>(c.label_bound());
  std::vector<std::vector<std::pair<Vertex, int>>> adj(nv);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adj[static_cast<std::size_t>(edges_[e][0])].emplace_back(edges_[e][1], static_cast<int>(e));
    adj[static_cast<std::size_t>(edges_[e][1])].emplace_back(edges_[e][0], static_cast<int>(e));
  }
  parent_.assign(nv, -1);
  parent_edge_.assign(nv, -1);
  depth_.assign(nv, -1);
  std::vector<char> tree_edge(edges_.size(), 0);
  for (Vertex root : c.vertices()) {
    if (depth_[static_cast<std::size_t>(root)] >= 0) continue;
    depth_[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : adj[static_cast<std::size_t>(v)]) {
        if (depth_[static_cast<std::size_t>(w)] >= 0) continue;
        depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(v)] + 1;
        parent_[static_cast<std::size_t>(w)] = v;
        parent_edge_[static_cast<std::size_t>(w)] = e;
        tree_edge[static_cast<std::size_t>(e)] = 1;
        queue.push_back(w);
      }
    }
  }
  generator_of_edge_.assign(edges_.size(), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!tree_edge[e]) {
      generator_of_edge_[e] = static_cast<int>(edge_of_generator_.size());
      edge_of_generator_.push_back(static_cast<int>(e));
    }
  }
  // Triangle boundaries, restricted to the non-tree edges.
  std::vector<SparseRow> relations;
  if (c.dimension() >= 2) {
    for (const auto& t : c.faces(2)) {
      SparseRow row;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto e = static_cast<std::size_t>(c.face_index(t.without_index(i)));
        if (generator_of_edge_[e] >= 0) {
          row.emplace_back(generator_of_edge_[e], Integer(i % 2 == 0 ? 1 : -1));
        }
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!row.empty()) relations.push_back(std::move(row));
    }
  }
  reduction_ = std::make_unique<PresentationReduction>(
      static_cast<int>(edge_of_generator_.size()), std::move(relations), true);
}

HomologyGroup FirstHomology::group() const {
  return HomologyGroup{static_cast<long long>(reduction_->free_rank()), reduction_->torsion()};
}

std::vector<Integer> FirstHomology::generator_vector(
    const std::vector<std::pair<Simplex, Integer>>& chain) const {
  std::vector<Integer> w(edge_of_generator_.size());
  for (const auto& [e, x] : chain) {
    const std::ptrdiff_t i = complex_.face_index(e);
    if (e.size() != 2 || i < 0) throw Error("not an edge of the complex: " + e.to_string());
    const int g = generator_of_edge_[static_cast<std::size_t>(i)];
    if (g >= 0) w[static_cast<std::size_t>(g)] += x;
  }
  return w;
}

CycleClass FirstHomology::chain_to_cycle(std::vector<std::pair<Simplex, Integer>> chain) const {
  std::map<Simplex, Integer> merged;
  for (auto& [e, x] : chain) {
    if (e.size() != 2 || !complex_.contains_face(e)) {
      throw Error("not an edge of the complex: " + e.to_string());
    }
    merged[e] += x;
  }
  std::map<Vertex, Integer> bd;
  CycleClass out;
  for (auto& [e, x] : merged) {
    if (x == 0) continue;
    bd[e[1]] += x;
    bd[e[0]] -= x;
    out.chain.emplace_back(e, x);
  }
  for (const auto& [v, x] : bd) {
    if (x != 0) throw Error("chain is not a cycle: boundary at vertex " + std::to_string(v));
  }
  out.coordinates = reduction_->coordinates(generator_vector(out.chain));
  out.ambient = shared_from_this();
  return out;
}

CycleClass FirstHomology::path_to_cycle(const VertexPath& path) const {
  if (!path.closed()) throw Error("path " + path.to_string() + " is not closed");
  std::vector<std::pair<Simplex, Integer>> chain;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const Vertex a = path.vertices[i], b = path.vertices[i + 1];
    if (a == b || a < 0 || b < 0) {
      throw Error("path step " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    }
    const Simplex e{std::min(a, b), std::max(a, b)};
    if (!complex_.contains_face(e)) {
      throw Error("missing edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    chain.emplace_back(e, Integer(a < b ? 1 : -1));
  }
  return chain_to_cycle(std::move(chain));
}

CycleClass FirstHomology::basis_cycle(std::size_t index) const {
  const std::vector<Integer> w = reduction_->representative(index);
  std::vector<std::pair<Simplex, Integer>> chain;
  auto step = [&](Vertex from, Vertex to, const Integer& x) {
    chain.emplace_back(Simplex{std::min(from, to), std::max(from, to)}, from < to ? x : -x);
  };
  for (std::size_t g = 0; g < w.size(); ++g) {
    if (w[g] == 0) continue;
    const Simplex& e = edges_[static_cast<std::size_t>(edge_of_generator_[g])];
    // Fundamental cycle: e[0] -> e[1], then back through the forest.
    step(e[0], e[1], w[g]);
    Vertex u = e[1], v = e[0];
    std::vector<Vertex> down;
    while (u != v) {
      if (depth_[static_cast<std::size_t>(u)] >= depth_[static_cast<std::size_t>(v)]) {
        const Vertex p = parent_[static_cast<std::size_t>(u)];
        step(u, p, w[g]);
        u = p;
      } else {
        down.push_back(v);
        v = parent_[static_cast<std::size_t>(v)];
      }
    }
    for (auto it = down.rbegin(); it != down.rend(); ++it) {
      step(parent_[static_cast<std::size_t>(*it)], *it, w[g]);
    }
  }
  return chain_to_cycle(std::move(chain));
}

IntMatrix FirstHomology::induced_matrix(std::span<const Vertex> perm) const {
  if (perm.size() < static_cast<std::size_t>(complex_.label_bound())) {
    throw Error("permutation too short");
  }
  const SimplicialComplex image = relabel(complex_, perm);
  if (!std::equal(image.facets().begin(), image.facets().end(), complex_.facets().begin(),
                  complex_.facets().end())) {
    throw Error("permutation is not an automorphism of the complex");
  }
  const std::size_t t = torsion_rank(), f = free_rank();
  IntMatrix m(f, f);
  for (std::size_t j = 0; j < f; ++j) {
    const CycleClass basis = basis_cycle(t + j);
    std::vector<std::pair<Simplex, Integer>> mapped;
    for (const auto& [e, x] : basis.chain) {
      const Vertex a = perm[static_cast<std::size_t>(e[0])], b = perm[static_cast<std::size_t>(e[1])];
      mapped.emplace_back(Simplex{std::min(a, b), std::max(a, b)}, a < b ? x : Integer(-x));
    }
    const CycleClass img = chain_to_cycle(std::move(mapped));
    for (std::size_t i = 0; i < f; ++i) m(i, j) = img.coordinates[t + i];
  }
  return m;
}

CycleClass path_to_cycle(const FirstHomology& h1, const VertexPath& path) {
  return h1.path_to_cycle(path);
}

bool are_homologous(const CycleClass& x, const CycleClass& y) {
  if (!x.ambient || x.ambient != y.ambient) {
    throw Error("cycle classes live in different homology bases");
  }
  return x.coordinates == y.coordinates;
}

IntMatrix induced_h1_matrix(const FirstHomology& h1, std::span<const Vertex> perm) {
  return h1.induced_matrix(perm);
}

}  // namespace cyclotri
