// laurent.hpp — integer Laurent polynomials in the local-system variables.
//
// One variable q_i per hyperplane. Terms are kept in a map ordered by
// lexicographically descending exponent vector, which fixes a canonical
// printed form: "q1*q2 - q1^-1*q2^-1", "-q1 + q1^-1", "0". Transport along a
// positive (resp. negative) path crossing a separating set S is the monomial
// prod_{i in S} q_i (resp. its inverse), and the skein element of a chamber
// pair is their difference.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "arrhom/rational.hpp"

namespace arrhom {

class LaurentPoly {
 public:
  using Expo = std::vector<int32_t>;
  using TermMap = std::map<Expo, Int, std::greater<Expo>>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const Int& c);
  static LaurentPoly monomial(int nvars, const Expo& e, const Int& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  bool operator==(const LaurentPoly& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;

  std::string str() const;
  Rational evaluate(const std::vector<Rational>& q) const;

 private:
  void set(const Expo& e, Int c);

  int nvars_;
  TermMap terms_;
};

// Quotient num/den when den divides num exactly in the Laurent ring; returns
// false otherwise. den must be nonzero.
bool try_exact_divide(const LaurentPoly& num, const LaurentPoly& den,
                      LaurentPoly& out);

using LaurentMat = std::vector<std::vector<LaurentPoly>>;

LaurentMat laurent_mul(const LaurentMat& a, const LaurentMat& b);
bool laurent_is_zero(const LaurentMat& m);

// Rank over the fraction field, by fraction-free elimination. Exact but
// intended for small matrices; throws beyond max_dim rows or columns.
int laurent_rank(LaurentMat m, int max_dim = 8);

// Transport monomial across separating set sep (0-based hyperplane indices);
// direction +1 gives prod q_i, direction -1 the inverse.
LaurentPoly transport(int nvars, const std::vector<int>& sep, int direction);

// skein = transport(+1) - transport(-1).
LaurentPoly skein(int nvars, const std::vector<int>& sep);

}  // namespace arrhom
