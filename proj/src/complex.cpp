#include "cyclotri/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "cyclotri/error.hpp"

namespace cyclotri {

struct SimplicialComplex::FaceCache {
  std::mutex mu;
  std::vector<std::unique_ptr<std::vector<Simplex>>> by_dim;
  std::unique_ptr<std::vector<Vertex>> vertices;
};

namespace {

// Appends every (size)-subset of `s` to `out`.
void append_subsets(const Simplex& s, std::size_t size, std::vector<Simplex>& out) {
  const std::size_t n = s.size();
  if (size > n || size == 0) return;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vertex> buf(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) buf[i] = s[idx[i]];
    out.emplace_back(buf);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Simplex> drop_non_maximal(std::vector<Simplex> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  facets.erase(std::remove_if(facets.begin(), facets.end(),
                              [](const Simplex& s) { return s.empty(); }),
               facets.end());
  if (facets.empty()) return facets;

  std::size_t min_size = facets.front().size(), max_size = min_size;
  for (const auto& f : facets) {
    min_size = std::min(min_size, f.size());
    max_size = std::max(max_size, f.size());
  }
  if (min_size == max_size) return facets;

  // Index larger simplices by their vertices, then test each candidate only
  // against larger simplices sharing its first vertex.
  std::unordered_map<Vertex, std::vector<std::size_t>> by_vertex;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].size() > min_size) {
      for (Vertex v : facets[i]) by_vertex[v].push_back(i);
    }
  }
  std::vector<Simplex> kept;
  kept.reserve(facets.size());
  for (const auto& f : facets) {
    bool maximal = true;
    if (f.size() < max_size) {
      auto it = by_vertex.find(f.front());
      if (it != by_vertex.end()) {
        for (std::size_t j : it->second) {
          const Simplex& g = facets[j];
          if (g.size() > f.size() && f.is_face_of(g)) {
            maximal = false;
            break;
          }
        }
      }
    }
    if (maximal) kept.push_back(f);
  }
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex::SimplicialComplex(int label_bound, std::vector<Simplex> facets)
    : label_bound_(label_bound), cache_(std::make_shared<FaceCache>()) {
  if (label_bound < 0) throw Error("negative vertex count");
  for (const auto& f : facets) {
    if (!f.empty() && f.back() >= label_bound) {
      throw Error("vertex " + std::to_string(f.back()) + " out of range for " +
                  std::to_string(label_bound) + " vertices");
    }
  }
  facets_ = drop_non_maximal(std::move(facets));
  for (const auto& f : facets_) {
    if (dimension_ >= 0 && f.dimension() != dimension_) pure_ = false;
    dimension_ = std::max(dimension_, f.dimension());
  }
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const {
  std::lock_guard lock(cache_->mu);
  if (dim < 0) dim = -1;
  const std::size_t slot = static_cast<std::size_t>(dim + 1);
  if (cache_->by_dim.size() <= slot) cache_->by_dim.resize(slot + 1);
  auto& entry = cache_->by_dim[slot];
  if (!entry) {
    auto out = std::make_unique<std::vector<Simplex>>();
    if (dim >= 0 && dim <= dimension_) {
      for (const auto& f : facets_) append_subsets(f, static_cast<std::size_t>(dim + 1), *out);
      std::sort(out->begin(), out->end());
      out->erase(std::unique(out->begin(), out->end()), out->end());
    }
    entry = std::move(out);
  }
  return *entry;
}

const std::vector<Vertex>& SimplicialComplex::vertices() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->vertices) {
    auto out = std::make_unique<std::vector<Vertex>>();
    for (const auto& f : facets_) out->insert(out->end(), f.begin(), f.end());
    std::sort(out->begin(), out->end());
    out->erase(std::unique(out->begin(), out->end()), out->end());
    cache_->vertices = std::move(out);
  }
  return *cache_->vertices;
}

bool SimplicialComplex::contains_face(const Simplex& face) const {
  return face_index(face) >= 0;
}

std::ptrdiff_t SimplicialComplex::face_index(const Simplex& face) const {
  if (face.empty()) return -1;
  const auto& list = faces(face.dimension());
  auto it = std::lower_bound(list.begin(), list.end(), face);
  if (it == list.end() || *it != face) return -1;
  return it - list.begin();
}

std::vector<std::size_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::size_t> f;
  for (int d = 0; d <= c.dimension(); ++d) f.push_back(c.faces(d).size());
  return f;
}

long long euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  const auto f = f_vector(c);
  for (std::size_t i = 0; i < f.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  }
  return chi;
}

SimplicialComplex link(const SimplicialComplex& c, const Simplex& face) {
  if (face.empty()) throw Error("link of the empty face is undefined");
  std::vector<Simplex> out;
  bool found = false;
  for (const auto& f : c.facets()) {
    if (face.is_face_of(f)) {
      found = true;
      out.push_back(f.minus(face));
    }
  }
  if (!found) throw Error("face absent: " + face.to_string());
  return SimplicialComplex(c.label_bound(), std::move(out));
}

SimplicialComplex link(const SimplicialComplex& c, Vertex v) { return link(c, Simplex{v}); }

SimplicialComplex span(const SimplicialComplex& c, std::span<const Vertex> vertex_set) {
  std::vector<char> in(static_cast<std::size_t>(c.label_bound()), 0);
  for (Vertex v : vertex_set) {
    if (v >= 0 && v < c.label_bound()) in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Simplex> out;
  std::vector<Vertex> buf;
  for (const auto& f : c.facets()) {
    buf.clear();
    for (Vertex v : f) {
      if (in[static_cast<std::size_t>(v)]) buf.push_back(v);
    }
    if (!buf.empty()) out.emplace_back(buf);
  }
  return SimplicialComplex(c.label_bound(), std::move(out));
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c) {
  std::vector<int> parent(static_cast<std::size_t>(c.label_bound()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : c.facets()) {
    for (std::size_t i = 1; i < f.size(); ++i) {
      int a = find(f[0]), b = find(f[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<Simplex>> groups;
  for (const auto& f : c.facets()) groups[find(f[0])].push_back(f);
  std::vector<SimplicialComplex> out;
  for (auto& [root, facets] : groups) out.emplace_back(c.label_bound(), std::move(facets));
  // Roots are the smallest vertex of each component, so map order is the
  // requested order.
  return out;
}

SimplicialComplex boundary_complex(const SimplicialComplex& c) {
  if (c.empty()) return SimplicialComplex(c.label_bound(), {});
  if (!c.is_pure()) throw Error("boundary of a non-pure complex");
  std::map<Simplex, int> count;
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) ++count[f.without_index(i)];
  }
  std::vector<Simplex> out;
  for (auto& [face, k] : count) {
    if (k > 2) throw Error("not a pseudomanifold: " + face.to_string() + " lies in " +
                           std::to_string(k) + " facets");
    if (k == 1 && !face.empty()) out.push_back(face);
  }
  return SimplicialComplex(c.label_bound(), std::move(out));
}

bool is_neighbourly(const SimplicialComplex& c) {
  const std::size_t n = c.vertex_count();
  if (c.dimension() < 1) return n <= 1;
  return c.faces(1).size() == n * (n - 1) / 2;
}

SimplicialComplex relabel(const SimplicialComplex& c, std::span<const Vertex> perm) {
  if (perm.size() < static_cast<std::size_t>(c.label_bound())) {
    throw Error("relabeling map too short");
  }
  int bound = c.label_bound();
  for (Vertex v : perm) bound = std::max(bound, v + 1);
  std::vector<Simplex> out;
  out.reserve(c.facet_count());
  std::vector<Vertex> buf;
  for (const auto& f : c.facets()) {
    buf.clear();
    for (Vertex v : f) buf.push_back(perm[static_cast<std::size_t>(v)]);
    out.push_back(Simplex::from_unsorted(buf));
  }
  return SimplicialComplex(bound, std::move(out));
}

SimplicialComplex facet_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> all(a.facets().begin(), a.facets().end());
  all.insert(all.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex(std::max(a.label_bound(), b.label_bound()), std::move(all));
}

}  // namespace cyclotri
