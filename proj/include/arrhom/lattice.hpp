// lattice.hpp — intersection lattice of an arrangement.
//
// Flats are the nonempty intersections of subsets of hyperplanes, ordered by
// reverse inclusion (the ambient space is the bottom element). Each flat is
// identified by the full set of hyperplanes containing it, so the bitmask is
// a unique key. The lattice carries the Möbius function, the Poincaré
// polynomial, and affine charts used to section the arrangement to a flat.
#pragma once

#include <cstdint>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/linalg.hpp"
#include "arrhom/rational.hpp"

namespace arrhom {

struct Flat {
  int rank = 0;            // codimension of the flat
  uint64_t contains = 0;   // bit i set <=> hyperplane i contains the flat
  RVec point;              // one point on the flat
  RMat eqs;                // RREF'd rows (normal | offset), normal.x + offset = 0
  Int mobius = 0;
};

class IntersectionLattice {
 public:
  static IntersectionLattice build(const Arrangement& arr);

  int dim() const { return dim_; }
  int rank() const;  // rank of the top flats
  bool essential() const { return rank() == dim_; }

  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& flat(int i) const { return flats_[i]; }
  int size() const { return static_cast<int>(flats_.size()); }

  // Lattice order: a <= b iff flat b is contained in flat a as a subset of
  // space, i.e. every hyperplane through a also passes through b.
  bool leq(int a, int b) const {
    return (flats_[a].contains & flats_[b].contains) == flats_[a].contains;
  }

  // Coefficients of the Poincaré polynomial, constant term first.
  const std::vector<Int>& poincare() const { return poincare_; }
  Int beta() const;

 private:
  int dim_ = 0;
  std::vector<Flat> flats_;     // sorted by (rank, contains)
  std::vector<Int> poincare_;
};

// Affine chart of a flat: the flat is { base + directions * u }.
struct FlatChart {
  RVec base;        // point on the flat
  RMat directions;  // dim x (dim - rank), full column rank
};

FlatChart flat_chart(const Flat& flat, int dim);

// Hyperplanes induced on the chart: each hyperplane of the arrangement whose
// restriction to the flat is proper (neither containing the flat nor disjoint
// from it) contributes one row. Rows are not deduplicated.
std::vector<Hyperplane> induced_rows(const Arrangement& arr,
                                     const FlatChart& chart);

// Arrangement with hyperplane i removed.
Arrangement deletion(const Arrangement& arr, int i);

// Arrangement induced on hyperplane i (projectively equal rows merged).
Arrangement restriction(const Arrangement& arr, int i);

}  // namespace arrhom
