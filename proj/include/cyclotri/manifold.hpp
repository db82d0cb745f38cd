#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclotri/complex.hpp"

namespace cyclotri {

/// Classification data of a closed triangulated surface.
struct SurfaceType {
  bool closed = false;
  bool connected = false;
  bool orientable = false;
  /// Orientable genus, or the number of cross-caps when non-orientable.
  /// For a disconnected surface this is the sum over components.
  int genus = 0;
  int components = 0;
  long long euler_characteristic = 0;

  bool is_sphere() const { return closed && connected && orientable && genus == 0; }
  bool is_torus() const { return closed && connected && orientable && genus == 1; }
  std::string to_string() const;
};

/// Recognizes a closed surface by closedness, vertex links, orientation
/// propagation and Euler characteristic.  Throws `Error` naming the
/// offending face when c is not a closed 2-manifold.
SurfaceType identify_closed_surface(const SimplicialComplex& c);

struct VertexLinkResult {
  Vertex vertex = 0;
  bool sphere = false;
  std::string detail;
};

struct ManifoldReport {
  bool is_manifold = false;
  std::optional<Vertex> first_failing;
  std::vector<VertexLinkResult> links;

  std::string summary() const;
};

enum class LinkScope {
  all_vertices,
  /// Only vertex 0; valid when a vertex-transitive symmetry is known.
  vertex_zero,
};

/// True iff every vertex link (or the link of vertex 0) is a 2-sphere.
/// Throws on input that is not pure of dimension 3.
ManifoldReport is_combinatorial_3_manifold(const SimplicialComplex& c,
                                           LinkScope scope = LinkScope::all_vertices);

}  // namespace cyclotri
