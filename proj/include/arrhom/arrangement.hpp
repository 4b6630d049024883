// arrangement.hpp — real hyperplane arrangements and sign vectors.
//
// A hyperplane is the zero set of an affine form alpha(x) = normal . x +
// offset; an arrangement is an ordered list of pairwise distinct hyperplanes
// in a common ambient dimension. Faces and chambers are encoded by sign
// vectors: entry i is the sign of alpha_i on the (relatively open) cell.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrhom/linalg.hpp"

namespace arrhom {

struct Hyperplane {
  RVec normal;      // size = ambient dimension, never the zero vector
  Rational offset;  // alpha(x) = normal . x + offset

  Rational value_at(const RVec& x) const {
    Rational v = offset;
    for (int i = 0; i < normal.size(); ++i) v += normal(i) * x(i);
    return v;
  }
};

// One sign per hyperplane: -1, 0, +1.
using SignVector = std::vector<int8_t>;

std::string sv_to_string(const SignVector& sv);  // e.g. "+-0"
SignVector sv_from_string(const std::string& text);

// Face partial order: x <= y iff x lies in the closure of y; on sign vectors
// this reads "for every i, x_i == y_i or x_i == 0".
bool sv_face_leq(const SignVector& x, const SignVector& y);

// Covector composition: (x o c)_i = x_i when nonzero, else c_i. For sign
// vectors of an actual face x and chamber c the result is again realizable
// (witness: points of the form p_x + eps (p_c - p_x) for small eps > 0).
SignVector sv_compose(const SignVector& x, const SignVector& c);

// Indices (0-based) where the two sign vectors have strictly opposite signs.
std::vector<int> separating_set(const SignVector& a, const SignVector& b);

uint64_t sv_zero_mask(const SignVector& sv);

// Total order used for canonical listings: entrywise -1 < 0 < +1, then lex.
bool sv_lex_less(const SignVector& a, const SignVector& b);

class Arrangement {
 public:
  // Validates: dim >= 1, at most 64 hyperplanes (index masks are 64-bit),
  // no zero normals, no pair of projectively equal rows. Throws input_error.
  Arrangement(int dim, std::vector<Hyperplane> hyperplanes);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hs_.size()); }
  const Hyperplane& hyperplane(int i) const { return hs_[at(i)]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hs_; }

  // Sign of alpha_i at x: -1, 0, +1.
  int side_of(int i, const RVec& x) const {
    return hs_[at(i)].value_at(x).sign();
  }

  SignVector sign_vector_at(const RVec& x) const;

 private:
  std::size_t at(int i) const;

  int dim_;
  std::vector<Hyperplane> hs_;
};

}  // namespace arrhom
