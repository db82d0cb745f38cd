#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclotri/diff_cycle.hpp"
#include "cyclotri/homology.hpp"
#include "cyclotri/int_matrix.hpp"

namespace cyclotri {

/// Subtractive Euclidean algorithm run on a pair of multiples of a common
/// divisor: (a, b) -> (a - b, b) while a > b, (b - a, a) while a < b, stop at
/// a == b.
struct EuclidRun {
  /// The inputs were interchanged so that the first one is the larger.
  bool swapped = false;
  std::vector<std::pair<int, int>> steps;  ///< (a_i, b_i), i = 1..N
};

EuclidRun subtractive_euclid(int larger_by_convention, int other);

struct MpqrParams {
  int p = 0, q = 0, r = 0;
  int n = 0;  ///< 2pq + r
  int m = 0;  ///< mp - kq = 1, 1 <= m <= q-1
  int k = 0;  ///< 1 <= k <= p-1
  int a = 0;  ///< gcd(p, r), with gcd(x, 0) = x
  int b = 0;  ///< gcd(q, r)
  EuclidRun euclid1;  ///< on ((p-k)q, kq)
  EuclidRun euclid2;  ///< on ((q-m)p, mp)
};

/// Throws unless 2 <= p < q, gcd(p, q) = 1 and r >= 0.
MpqrParams derive_params(int p, int q, int r);

CyclicComplex build_B(const MpqrParams& params);
/// which = 1, 2 or 3.
CyclicComplex build_F(const MpqrParams& params, int which);
CyclicComplex build_M(int p, int q, int r);
CyclicComplex build_M(const MpqrParams& params);

struct MeridianCheck {
  bool closed = false;
  bool simple = false;
  bool in_boundary = false;
  bool null_in_component = false;
  bool nontrivial_in_boundary = false;

  bool passed() const {
    return closed && simple && in_boundary && null_in_component && nontrivial_in_boundary;
  }
  std::string failures() const;
};

struct MeridianPath {
  VertexPath path;
  int fibre = 0;      ///< 1, 2 or 3
  int component = 0;  ///< i in m_1^(i), j in m_2^(j); 0 for m_3
  MeridianCheck check;
};

/// The boundary curves of the meridian discs of F1, F2 and (r > 0) F3, each
/// verified against its component.  Throws if a check fails.
std::vector<MeridianPath> meridian_paths(const MpqrParams& params);

/// Closedness, simplicity, containment in the boundary, and the two homology
/// conditions, evaluated inside `component`.
MeridianCheck check_meridian(const SimplicialComplex& component, const VertexPath& path);

/// Predicted homology of M(p,q,r), torsion in invariant-factor form.
HomologyGroups expected_homology(int p, int q, int r);

struct SeifertFibre {
  int alpha = 0;
  int beta = 0;
  int multiplicity = 0;
};

struct SeifertData {
  int p = 0, q = 0, r = 0;
  int a = 0, b = 0;
  int base_genus = 0;
  std::vector<SeifertFibre> fibres;  ///< (-p/a, b1)^b, (q/b, b2)^a, (-r/ab, b3)^1
  int b1 = 0, b2 = 0, b3 = 0;
  /// qr*b1 - pr*b2 + pq*b3 - ab; zero for a valid solution.
  Integer residual;
  /// Only set for r = 0, where the manifold is a connected sum.
  std::string connected_sum;

  std::string to_string() const;
};

/// Solves the fibre-type equation with the extended gcd and normalizes
/// b1 into [0, p/a) and b2 into [0, q/b).  For r = 0 returns the connected-sum
/// description instead.
SeifertData expected_seifert(int p, int q, int r);

struct ShiftAction {
  int q = 0, k = 0;
  IntMatrix basis_coordinates;  ///< columns: the cycles a_1..a_{q-1} in the SNF basis
  IntMatrix action;             ///< the shift in the basis a_1..a_{q-1}
  int order = 0;
  bool maps_to_next = false;    ///< g.a_i = a_{i+1} for i < q-1
};

/// Action of the shift v -> v+1 on H_1(M(2, q, 2kq)) in the basis
/// a_{v-1} = <v, v-1, v-2, v>, 2 <= v <= q.  Throws if q is not an odd
/// prime, if H_1 is not free of rank q-1, or if the a_i are not a basis.
ShiftAction shift_action(int q, int k);

/// Closed paths <v, v-1, ..., v-p, v> (p <= v <= kq) and <v, ..., v-q, v>
/// (q <= v <= (q-m)p) that exist in the complex.
std::vector<VertexPath> homology_generating_paths(const MpqrParams& params,
                                                  const SimplicialComplex& complex);

/// Every generating path is homologous to its translate by pq.  Throws if a
/// translate uses a missing edge.
bool shift_homology_check(int p, int q, int r);

}  // namespace cyclotri
