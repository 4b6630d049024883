// chambers.hpp — chambers and faces of a real arrangement.
//
// Chambers are enumerated incrementally: hyperplanes are inserted one at a
// time and each existing chamber either keeps its sign or splits in two, with
// feasibility of the new side decided exactly. Faces are enumerated flat by
// flat: the arrangement is sectioned to an affine chart of the flat, the
// chambers of the section are the faces lying on that flat, and their sign
// vectors are read off at lifted sample points.
#pragma once

#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/lattice.hpp"
#include "arrhom/linalg.hpp"

namespace arrhom {

struct Chamber {
  SignVector sv;
  RVec sample;  // interior point
};

// All chambers, sorted by sign vector (entrywise -1 < 0 < +1, then lex).
std::vector<Chamber> enumerate_chambers(const Arrangement& arr);

struct Face {
  SignVector sv;
  RVec sample;    // point in the relative interior
  int flat = 0;   // index into the lattice flat list
  int codim = 0;  // rank of that flat
};

// All faces (chambers included, as the faces of the ambient flat), grouped by
// flat in lattice order and sorted by sign vector within each flat.
std::vector<Face> enumerate_faces(const Arrangement& arr,
                                  const IntersectionLattice& lat);

// True when the chamber is relatively bounded: its recession cone equals the
// lineality space of the arrangement (plain boundedness when essential).
bool chamber_bounded(const Arrangement& arr, const SignVector& sv);

}  // namespace arrhom
