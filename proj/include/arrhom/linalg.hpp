// linalg.hpp — dense exact linear algebra over the rationals.
//
// Eigen dense types templated on the exact Rational scalar, plus the small
// set of elimination routines the rest of the library needs. Reduction is
// fully deterministic (first-nonzero pivoting), so reduced echelon forms are
// canonical and usable as dictionary keys for affine-subspace identity.
#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>

#include "arrhom/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<arrhom::Rational> {
  using Real = arrhom::Rational;
  using NonInteger = arrhom::Rational;
  using Nested = arrhom::Rational;
  using Literal = int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static inline arrhom::Rational epsilon() { return arrhom::Rational(0); }
  static inline arrhom::Rational dummy_precision() {
    return arrhom::Rational(0);
  }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace arrhom {

using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// In-place reduced row echelon form (pivots normalized to 1, zeros above and
// below). Returns the rank. Deterministic: scans columns left to right and
// picks the first nonzero pivot row.
int rref_in_place(RMat& m);

int rank_of(RMat m);  // by value: reduces a copy

// Columns span the kernel of m (dim = cols - rank). Free variables are set
// to 1 one at a time, in ascending column order.
RMat nullspace(const RMat& m);

// Exact solution of A x = b with free variables pinned to 0; nullopt when
// inconsistent.
std::optional<RVec> solve(const RMat& a, const RVec& b);

// Canonical row-major serialization, usable as a dictionary key. Only
// meaningful for matrices already in a canonical form (e.g. after rref).
std::string matrix_key(const RMat& m);

}  // namespace arrhom
