#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclotri/complex.hpp"
#include "cyclotri/manifold.hpp"

namespace cyclotri {

/// The Z_n-orbit of the simplex <0, a_0, a_0+a_1, ...>, written (a_0 : ... : a_d)
/// with n = a_0 + ... + a_d.  Always held in its lexicographically least
/// rotation.
class DifferenceCycle {
 public:
  /// Throws on an empty tuple or a non-positive entry.
  explicit DifferenceCycle(std::vector<int> entries);

  std::span<const int> entries() const { return entries_; }
  int dimension() const { return static_cast<int>(entries_.size()) - 1; }
  int vertex_count() const { return n_; }
  /// Number of distinct simplices in the orbit.
  int orbit_length() const { return orbit_length_; }
  bool is_short() const { return orbit_length_ < n_; }

  Simplex base_simplex() const;
  std::vector<Simplex> orbit() const;

  std::string to_string() const;

  friend auto operator<=>(const DifferenceCycle& a, const DifferenceCycle& b) {
    return a.entries_ <=> b.entries_;
  }
  friend bool operator==(const DifferenceCycle& a, const DifferenceCycle& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<int> entries_;
  int n_ = 0;
  int orbit_length_ = 0;
};

DifferenceCycle canonicalize(std::vector<int> entries);

/// Difference cycle of the orbit through `s` in Z_n.
DifferenceCycle difference_cycle_of(const Simplex& s, int n);

/// A Z_n-invariant complex given by disjoint difference cycles on n vertices.
class CyclicComplex {
 public:
  CyclicComplex() = default;

  /// Throws "cycles not disjoint" when two entries describe the same orbit,
  /// and on mismatched vertex counts or dimensions.
  CyclicComplex(int n, std::vector<DifferenceCycle> cycles);

  /// Set-union semantics: repeated orbits are merged silently.
  static CyclicComplex from_union(int n, std::vector<DifferenceCycle> cycles);

  int n() const { return n_; }
  std::span<const DifferenceCycle> cycles() const { return cycles_; }
  std::size_t size() const { return cycles_.size(); }
  bool contains(const DifferenceCycle& d) const;
  std::size_t facet_count() const;

  friend bool operator==(const CyclicComplex&, const CyclicComplex&) = default;

 private:
  int n_ = 0;
  std::vector<DifferenceCycle> cycles_;
};

SimplicialComplex expand(const CyclicComplex& cc);

/// Inverse of `expand`.  Throws naming a facet whose shift is absent when c
/// is not invariant under v -> v+1 mod n.
CyclicComplex compress(const SimplicialComplex& c, int n);

/// lambda * cc: every label multiplied by the unit lambda mod n.
CyclicComplex scale(const CyclicComplex& cc, int lambda);

/// Units lambda of Z_n with lambda * cc = cc, ascending.
std::vector<int> multipliers(const CyclicComplex& cc);

/// 4-subsets of {0..n-1} satisfying Gale's evenness condition, by exhaustive
/// enumeration.  Throws for n < 5.
SimplicialComplex gale_facets(int n);

/// The boundary of the cyclic 4-polytope as {(1:i:1:n-2-i) : 1 <= i <= n/2}.
CyclicComplex cyclic_polytope_boundary(int n);

/// Solid-torus split A(l,n), B(l,n) of the cyclic polytope boundary.
/// B holds the cycles with i > l that are not already in A.  Requires
/// 1 <= l <= (n-1)/2 - 2, so that both parts are solid tori.
std::pair<CyclicComplex, CyclicComplex> torus_decomposition(int n, int l);

/// Evidence that a complex triangulates a (possibly disconnected) solid torus.
struct SolidTorusEvidence {
  bool circle_homology = false;  ///< H_* = (Z, Z, 0, 0) per component
  bool torus_boundary = false;   ///< boundary of each component is a torus
  bool collapses_to_curve = false;  ///< greedy collapse reaches dimension <= 1
  int components = 0;

  bool holds() const { return circle_homology && torus_boundary; }
};
SolidTorusEvidence solid_torus_evidence(const SimplicialComplex& c);

/// Vertex-0 link check, valid by vertex transitivity.
ManifoldReport is_combinatorial_3_manifold(const CyclicComplex& cc);

}  // namespace cyclotri
