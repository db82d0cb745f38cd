#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclotri/complex.hpp"

namespace cyclotri {

/// An rsl-function, reduced to the total order it induces on the vertices.
class RslFunction {
 public:
  /// `order` lists the vertices from lowest to highest value.
  static RslFunction from_order(std::vector<Vertex> order, int label_bound);
  /// f(v) = v.
  static RslFunction identity(int label_bound);
  /// Uniformly random order, reproducible from `seed`.
  static RslFunction random(int label_bound, std::uint64_t seed);

  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& order() const { return order_; }
  int label_bound() const { return static_cast<int>(rank_.size()); }

  /// Exchanges the vertices at positions i and i+1 of the order.
  void swap_adjacent(std::size_t i);

 private:
  std::vector<Vertex> order_;
  std::vector<int> rank_;
};

struct CriticalPoint {
  Vertex vertex = 0;
  int index = 0;
  long long multiplicity = 0;
  friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

/// Critical points with respect to `f`: vertex v has index i with multiplicity
/// equal to the reduced GF(2) Betti number of degree i-1 of the part of
/// lk(v) spanned by lower vertices.  Throws unless c is a closed
/// combinatorial 3-manifold.
std::vector<CriticalPoint> critical_points(const SimplicialComplex& c, const RslFunction& f);

struct MorseVector {
  std::array<long long, 4> counts{};

  long long total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  long long alternating_sum() const { return counts[0] - counts[1] + counts[2] - counts[3]; }
  std::string to_string() const;  // "(c0, c1, c2, c3)"
  friend bool operator==(const MorseVector&, const MorseVector&) = default;
};

/// Totals per index.  Checks the Morse relation against the Euler
/// characteristic of c and the Morse inequality against its GF(2) Betti
/// numbers; a failure throws InternalError.
MorseVector morse_vector(const SimplicialComplex& c, const std::vector<CriticalPoint>& points);

/// Precomputed vertex links for repeated critical-point evaluations.
class LinkTable {
 public:
  explicit LinkTable(const SimplicialComplex& c);

  const SimplicialComplex& complex() const { return complex_; }
  /// Reduced GF(2) Betti numbers (degrees -1..2) of the lower link of v.
  std::array<long long, 4> lower_link_betti(Vertex v, const RslFunction& f) const;
  std::vector<CriticalPoint> critical_points(const RslFunction& f) const;
  long long index_one_total(const RslFunction& f) const;

 private:
  // Link of one vertex as a 2-complex over local vertex indices.
  struct Link {
    std::vector<Vertex> vertices;
    std::vector<std::array<int, 2>> edges;      // local vertex indices
    std::vector<std::array<int, 3>> triangles;  // local edge indices
  };

  SimplicialComplex complex_;
  std::vector<Link> links_;  // by vertex label
};

struct HeegaardSearchOptions {
  int restarts = 16;
  int iterations = 200;
  std::uint64_t seed = 1;
};

struct HeegaardBound {
  long long genus_bound = 0;
  RslFunction witness = RslFunction::identity(0);
  MorseVector morse;
  int witness_restart = -1;  ///< -1 for the identity order
};

/// Smallest index-1 critical total found over the identity order and seeded
/// random restarts, each refined by adjacent-swap descent.
HeegaardBound heegaard_upper_bound(const SimplicialComplex& c,
                                   const HeegaardSearchOptions& options = {});

}  // namespace cyclotri
