// chain.hpp — the twisted minimal chain complex of an arrangement complement.
//
// For a generic oriented flag the level-k chambers index the k-cells. The
// boundary map entry pairing a level-k chamber C with a level-(k-1) chamber
// C' is  -sign(C) * deg(C, C') * (q_sep - q_sep^{-1}),  where sep is the set
// of hyperplanes separating C from C' and deg is the local degree computed in
// the F^k section. Homology at a concrete nonzero weight vector is computed
// by exact rank over the rationals.
#pragma once

#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/chambers.hpp"
#include "arrhom/flag.hpp"
#include "arrhom/lattice.hpp"
#include "arrhom/laurent.hpp"

namespace arrhom {

struct ChainComplex {
  int ell = 0;  // ambient dimension
  int n = 0;    // hyperplane count = Laurent variable count
  std::vector<std::vector<int>> basis;  // [k] = chamber indices of level k
  std::vector<LaurentMat> boundary;  // [k]: |basis[k-1]| x |basis[k]|, k >= 1
  std::vector<Chamber> chambers;     // global chamber list, lex order
  std::vector<int> sign;             // per chamber, +1 or -1
};

// Throws unsupported_dimension beyond ambient dimension 3 and input_error if
// the flag is not generic.
ChainComplex build_complex(const Arrangement& arr,
                           const IntersectionLattice& lat,
                           const OrientedFlag& flag,
                           const std::vector<Chamber>& chambers);

// All composites boundary[k] . boundary[k+1] vanish identically.
bool boundary_squares_to_zero(const ChainComplex& cc);

// Twisted Betti numbers h_0..h_ell at the given nonzero weights.
std::vector<int> homology_dims(const ChainComplex& cc,
                               const std::vector<Rational>& q);

// Weight vector q_i = i-th prime; by unique factorization no monomial
// identity can hold at it, so it realizes the generic homology.
std::vector<Rational> generic_probe(int n);

bool is_resonant(const ChainComplex& cc, const std::vector<Rational>& q);

}  // namespace arrhom
