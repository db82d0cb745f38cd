#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cyclotri/complex.hpp"
#include "cyclotri/int_matrix.hpp"
#include "cyclotri/sparse_reduction.hpp"

namespace cyclotri {

/// Z^betti + Z_{t_1} + ... + Z_{t_k} with t_1 | t_2 | ... | t_k.
struct HomologyGroup {
  long long betti = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return betti == 0 && torsion.empty(); }
  std::string to_string() const;  // "0", "Z", "Z^2 + Z_3"
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyGroups {
  std::vector<HomologyGroup> groups;  ///< index = dimension

  const HomologyGroup& operator[](std::size_t i) const { return groups[i]; }
  std::size_t size() const { return groups.size(); }
  std::string to_string() const;  // "(Z, Z_3, 0, Z)"
  friend bool operator==(const HomologyGroups&, const HomologyGroups&) = default;
};

/// Integral simplicial homology from Smith normal forms of the boundary maps.
HomologyGroups homology_groups(const SimplicialComplex& c, bool reduced = false);

/// Boundary map C_dim -> C_{dim-1} as sparse rows indexed by dim-faces.
std::vector<SparseRow> boundary_rows(const SimplicialComplex& c, int dim);

/// A closed edge path <v_1, ..., v_r> with v_1 = v_r.
struct VertexPath {
  std::vector<Vertex> vertices;

  bool closed() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
  /// Adds x mod n to every vertex.
  VertexPath shifted(int x, int n) const;
  std::string to_string() const;
};

class FirstHomology;

/// A 1-cycle together with its coordinates in the H_1 basis of its ambient
/// complex.
struct CycleClass {
  std::shared_ptr<const FirstHomology> ambient;
  /// Coefficients on the edges of the ambient complex, edges oriented from
  /// the smaller to the larger vertex id.
  std::vector<std::pair<Simplex, Integer>> chain;
  /// Torsion coordinates (reduced mod the invariant factor), then free ones.
  std::vector<Integer> coordinates;

  bool is_zero() const;
};

/// H_1 of a fixed complex with a fixed basis.  Built once per complex; every
/// CycleClass refers to the basis of the FirstHomology it came from.
///
/// Cycles are identified with Z^{non-tree edges} through a spanning forest
/// and classes are computed in the quotient by the triangle boundaries.
class FirstHomology : public std::enable_shared_from_this<FirstHomology> {
 public:
  static std::shared_ptr<const FirstHomology> of(const SimplicialComplex& c);

  const SimplicialComplex& complex() const { return complex_; }
  HomologyGroup group() const;
  std::size_t free_rank() const { return reduction_->free_rank(); }
  std::size_t torsion_rank() const { return reduction_->torsion_coordinate_count(); }

  /// Throws naming the pair when a step is not an edge, or when the path
  /// is not closed.
  CycleClass path_to_cycle(const VertexPath& path) const;
  CycleClass chain_to_cycle(std::vector<std::pair<Simplex, Integer>> chain) const;

  /// A cycle representing basis element `index` (torsion first, then free).
  CycleClass basis_cycle(std::size_t index) const;

  /// Action of a simplicial automorphism on H_1 modulo torsion, as the
  /// matrix whose column j holds the image of free basis element j.
  /// Throws if perm does not map the facet set onto itself.
  IntMatrix induced_matrix(std::span<const Vertex> perm) const;

 private:
  explicit FirstHomology(const SimplicialComplex& c);

  SimplicialComplex complex_;
  std::vector<Simplex> edges_;
  std::vector<int> generator_of_edge_;  // -1 for spanning-forest edges
  std::vector<int> edge_of_generator_;
  std::vector<int> parent_;             // spanning forest, by vertex label
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
  std::unique_ptr<PresentationReduction> reduction_;

  std::vector<Integer> generator_vector(
      const std::vector<std::pair<Simplex, Integer>>& chain) const;
};

CycleClass path_to_cycle(const FirstHomology& h1, const VertexPath& path);

/// Throws when x and y live in different ambient bases.
bool are_homologous(const CycleClass& x, const CycleClass& y);

IntMatrix induced_h1_matrix(const FirstHomology& h1, std::span<const Vertex> perm);

}  // namespace cyclotri
