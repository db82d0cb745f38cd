#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "cyclotri/simplex.hpp"

namespace cyclotri {

/// A finite abstract simplicial complex stored by its facets.
///
/// `label_bound()` is the size of the label range the vertex ids live in;
/// links and spans keep the labels of their parent, so the vertex set of a
/// complex may be a proper subset of [0, label_bound()).  Faces of each
/// dimension are generated on first request and shared between copies.
class SimplicialComplex {
 public:
  SimplicialComplex();

  /// Normalizes the facet list: sorts, drops duplicates and simplices
  /// contained in another one.  Throws if an id falls outside [0, label_bound).
  SimplicialComplex(int label_bound, std::vector<Simplex> facets);

  int label_bound() const { return label_bound_; }
  std::span<const Simplex> facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool empty() const { return facets_.empty(); }

  /// Maximal facet dimension; -1 for the empty complex.
  int dimension() const { return dimension_; }
  bool is_pure() const { return pure_; }

  /// Sorted list of all faces of the given dimension.
  const std::vector<Simplex>& faces(int dim) const;
  /// Sorted list of vertex ids that occur in some facet.
  const std::vector<Vertex>& vertices() const;
  std::size_t vertex_count() const { return vertices().size(); }

  bool contains_face(const Simplex& face) const;
  /// Position of `face` in `faces(face.dimension())`, or -1.
  std::ptrdiff_t face_index(const Simplex& face) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.label_bound_ == b.label_bound_ && a.facets_ == b.facets_;
  }

 private:
  struct FaceCache;

  int label_bound_ = 0;
  int dimension_ = -1;
  bool pure_ = true;
  std::vector<Simplex> facets_;
  std::shared_ptr<FaceCache> cache_;
};

/// (f_0, ..., f_d).
std::vector<std::size_t> f_vector(const SimplicialComplex& c);
long long euler_characteristic(const SimplicialComplex& c);

/// Faces g with g disjoint from `face` and g ∪ face in c.  Throws
/// "face absent" when `face` is not a face of c.
SimplicialComplex link(const SimplicialComplex& c, const Simplex& face);
SimplicialComplex link(const SimplicialComplex& c, Vertex v);

/// All faces of c whose vertices lie in `vertex_set`.
SimplicialComplex span(const SimplicialComplex& c, std::span<const Vertex> vertex_set);

/// Components under transitive vertex sharing, ordered by smallest vertex.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& c);

/// Codimension-one faces lying in exactly one facet.  Throws
/// "not a pseudomanifold" if some such face lies in three or more facets.
SimplicialComplex boundary_complex(const SimplicialComplex& c);

bool is_neighbourly(const SimplicialComplex& c);

/// Image of c under a relabeling (perm[v] is the new label of v).
SimplicialComplex relabel(const SimplicialComplex& c, std::span<const Vertex> perm);

/// Union of the facet sets; the label bound is the larger of the two.
SimplicialComplex facet_union(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace cyclotri
