// degree.hpp — local degrees pairing cell chambers with boundary chambers.
//
// cell_degree(section, k, sv_cell, sv_target) is the degree attached to a
// level-k chamber (the k-cell) against a level-(k-1) chamber, computed inside
// the F^k section of the arrangement (k-variable chart, one row per
// hyperplane, indices aligned with the ambient arrangement).
//
// Level 1: the target is the base chamber and the degree is the constant -1.
//
// Level 2: the target's trace on the line y_2 = 0 is an interval. Walking in
// the +y_1 direction, each finite endpoint sits on a unique row i and
// contributes u = sv_cell[i] * sign of that row's y_1 slope; an endpoint cut
// off at the clip bound contributes +1 on the left and -1 on the right. The
// degree is (u(right) - u(left)) / 2.
//
// Level 3: the target's trace on the plane y_3 = 0, clipped to a large box,
// is a convex polygon. The admissible direction field of the cell chamber is
// sampled exactly: on an edge supported by row i it is sv_cell[i] times the
// row's in-plane gradient, on a box edge it is the inward normal, and at each
// corner one exact witness of the open cone cut out by all incident
// conditions. Consecutive representatives always share an open half-plane, so
// the degree is the winding number of that cyclic vector sequence, counted by
// exact signed ray crossings.
#pragma once

#include <vector>

#include "arrhom/arrangement.hpp"

namespace arrhom {

// Stability knobs; the defaults are the production path. Degrees are
// invariant under both (checked by the test suite).
struct DegreeOptions {
  // Multiplies the automatically chosen clip bound (>= 1).
  Rational clip_scale = Rational(1);
  // Selects the alternate deterministic interior-witness rule.
  int witness_variant = 0;
};

// Level-3 evidence: the cyclic directing representatives on the polygon
// boundary and the winding number they produced.
struct Level3Trace {
  std::vector<RVec> reps;
  int winding = 0;
};

int cell_degree(const Arrangement& section, int k, const SignVector& sv_cell,
                const SignVector& sv_target, const DegreeOptions& options = {},
                Level3Trace* trace = nullptr);

}  // namespace arrhom
