// flag.hpp — generic oriented flags and the induced chamber partition.
//
// An oriented flag F^0 c F^1 c ... c F^d is given by a base point (F^0) and
// an ordered basis v_1..v_d, with F^k = base + span(v_1..v_k). The flag is
// generic when every flat of rank r misses F^k for k < r and meets it in the
// expected dimension for k >= r. For a generic flag each chamber C gets a
// level (the least k with C meeting F^k) and a sign (the side of F^{k-1}
// within F^k on which C appears).
#pragma once

#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/chambers.hpp"
#include "arrhom/lattice.hpp"
#include "arrhom/linalg.hpp"

namespace arrhom {

struct OrientedFlag {
  RVec base;   // F^0
  RMat basis;  // columns v_1..v_d
};

bool flag_is_generic(const Arrangement& arr, const IntersectionLattice& lat,
                     const OrientedFlag& flag);

// Deterministic seeded search: basis vectors on the moment curve, base far in
// the negative orthant of the curve, retried until exactly generic.
OrientedFlag build_flag(const Arrangement& arr, const IntersectionLattice& lat,
                        unsigned seed);

// The arrangement induced on F^k in flag coordinates y_1..y_k (the point is
// base + sum y_j v_j). Hyperplane i maps to row i; for a generic flag no row
// degenerates, so indices match the ambient arrangement.
Arrangement flag_section(const Arrangement& arr, const OrientedFlag& flag,
                         int k);

struct ChamberLevels {
  std::vector<int> level;               // per chamber
  std::vector<int> sign;                // per chamber, +1 or -1
  std::vector<RVec> section_sample;     // per chamber, in F^level coordinates
  std::vector<std::vector<int>> by_level;  // chamber indices per level; level
                                           // 1 ordered along +v_1
};

ChamberLevels partition_chambers(const Arrangement& arr,
                                 const OrientedFlag& flag,
                                 const std::vector<Chamber>& chambers);

}  // namespace arrhom
