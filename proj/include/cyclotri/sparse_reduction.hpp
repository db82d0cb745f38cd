#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cyclotri/int_matrix.hpp"

namespace cyclotri {

/// One sparse row: (column, value) pairs with strictly increasing columns and
/// no zero values.
using SparseRow = std::vector<std::pair<int, Integer>>;

/// Quotient Z^generators / <relations>, reduced by eliminating generators
/// that occur with coefficient +-1 in some relation, followed by a dense
/// Smith normal form on whatever is left.
///
/// With `track_classes` set, the reduction also records the substitutions
/// needed to map a vector of generator coefficients to coordinates in the
/// resulting invariant-factor basis.
class PresentationReduction {
 public:
  PresentationReduction(int generators, std::vector<SparseRow> relations,
                        bool track_classes);

  int generator_count() const { return generators_; }
  /// Rank of the relation matrix.
  std::size_t rank() const { return eliminated_.size() + smith_.rank(); }
  /// All non-zero invariant factors (leading ones included).
  std::vector<Integer> invariant_factors() const;
  /// Invariant factors > 1.
  std::vector<Integer> torsion() const;
  std::size_t free_rank() const { return static_cast<std::size_t>(generators_) - rank(); }

  /// Coordinates of the class of `w` (dense, one entry per original
  /// generator): torsion coordinates reduced into [0, d), then free ones.
  std::vector<Integer> coordinates(std::vector<Integer> w) const;

  /// A generator vector whose class is the basis element with the given
  /// coordinate index (torsion first, then free).
  std::vector<Integer> representative(std::size_t coordinate) const;

  std::size_t coordinate_count() const { return torsion_index_.size() + free_index_.size(); }
  std::size_t torsion_coordinate_count() const { return torsion_index_.size(); }

 private:
  struct Substitution {
    int generator;
    SparseRow expression;  // generator = sum of expression over other generators
  };

  int generators_ = 0;
  bool track_ = false;
  std::vector<Substitution> eliminated_;
  // Original ids of surviving generators; the first active_ of them occur
  // in the residual relations and are covered by smith_.
  std::vector<int> remaining_;
  std::size_t active_ = 0;
  std::vector<int> position_;       // original id -> index in remaining_, or -1
  SmithForm smith_;
  std::vector<std::size_t> torsion_index_;  // diagonal positions with d > 1
  std::vector<std::size_t> free_index_;     // positions >= rank
};

}  // namespace cyclotri
