#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclotri/diff_cycle.hpp"
#include "cyclotri/manifold.hpp"

namespace cyclotri {

/// The short cycle (1 : n/2-1 : 1 : n/2-1) on an even number of vertices.
DifferenceCycle short_cycle(int n);

/// Rotation of a 3-dimensional cycle with its largest entry last; ties go to
/// the lexicographically least such rotation.
std::vector<int> max_last_rotation(const DifferenceCycle& d);

struct ExpandabilityReport {
  bool expandable = false;
  bool even = false;
  bool short_cycle_present = false;
  /// Ordinary cycles without an entry >= n/2, each with the expansion step
  /// k0 = d0 + d1 + d2 - n/2 at which the forced expansion breaks.
  std::vector<std::pair<DifferenceCycle, int>> violators;

  std::string summary() const;
};

ExpandabilityReport check_expandable(const CyclicComplex& cc);

/// A cyclic complex split into the short cycle and its ordinary cycles.
class ExpansionFamily {
 public:
  /// Requires n even and the short cycle present, but not the criterion.
  static ExpansionFamily decompose(const CyclicComplex& cc);
  /// Same as decompose, and throws unless every ordinary cycle satisfies
  /// d0 + d1 + d2 <= n/2.
  static ExpansionFamily from(const CyclicComplex& cc);

  int n() const { return n_; }
  const CyclicComplex& base() const { return base_; }
  /// Ordinary cycles as max-last rotations.
  const std::vector<std::vector<int>>& ordinary() const { return ordinary_; }
  bool satisfies_criterion() const;

 private:
  int n_ = 0;
  CyclicComplex base_;
  std::vector<std::vector<int>> ordinary_;
};

/// M_k on n+k vertices.  Throws for k < 0 or a family violating the criterion.
CyclicComplex expand_family(const ExpansionFamily& fam, int k);

/// M_k built from the formula without checking the criterion.
CyclicComplex forced_expansion(const ExpansionFamily& fam, int k);

struct Contraction {
  CyclicComplex complex;
  ManifoldReport manifold;
};

/// The (n-1)-vertex candidate {(d0 : d1 : d2 : d3 - 1)}.  Manifoldness is
/// reported, not required.  Throws if an entry would drop to zero.
Contraction contract_once(const ExpansionFamily& fam);

/// A criterion-violating manifold together with its failing forced expansion.
struct ViolatingFamily {
  CyclicComplex base;
  DifferenceCycle violator;
  int k0 = 0;
  CyclicComplex forced;
  ManifoldReport forced_report;
};

/// All cyclic combinatorial 3-manifolds on n vertices (n even) that contain
/// the short cycle, found by backtracking over difference cycles with the
/// "every triangle in exactly two tetrahedra" constraint.  Stops after
/// `limit` results when limit > 0.
std::vector<CyclicComplex> short_cycle_manifolds(int n, std::size_t limit = 0);

/// Searches n = 6, 8, ..., max_n for manifolds violating the expansion
/// criterion whose forced expansion fails the link check.
std::optional<ViolatingFamily> find_violating_family(int max_n);

}  // namespace cyclotri
