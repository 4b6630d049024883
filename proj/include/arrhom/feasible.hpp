// feasible.hpp — exact feasibility and witness points for linear systems.
//
// Systems of affine constraints row . (x, 1) REL 0 with REL in {=, >=, >}.
// Feasibility is decided by Gaussian substitution of the equalities followed
// by Fourier–Motzkin elimination of the inequalities, tracking strict/closed
// relations exactly. A feasible system yields a rational witness point by
// back-substitution: the midpoint of each residual interval, or +/-1 beyond
// the finite end when the interval is a half-line (0 when unconstrained).
// Everything is deterministic, so witnesses are reproducible.
#pragma once

#include <optional>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/linalg.hpp"

namespace arrhom {

enum class Rel : uint8_t { eq, ge, gt };

struct Constraint {
  RVec row;  // size dim + 1; trailing entry is the constant term
  Rel rel;
};

class LinearSystem {
 public:
  explicit LinearSystem(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(rows_.size()); }

  // coeffs . x + constant REL 0
  void add(const RVec& coeffs, const Rational& constant, Rel rel);

  // sign > 0: alpha > 0; sign < 0: alpha < 0; sign == 0: alpha == 0.
  void add_hyperplane_sign(const Hyperplane& h, int sign);

  // One condition per hyperplane of the arrangement, following sv.
  void add_sign_vector(const Arrangement& arr, const SignVector& sv);

  bool feasible() const;

  // Witness point, or nullopt when infeasible. variant selects between two
  // deterministic interior-point rules (0: interval midpoints, unit steps
  // past finite ends; 1: quarter points, double steps), giving independent
  // witnesses for stability checks.
  std::optional<RVec> sample(int variant = 0) const;

 private:
  int dim_;
  std::vector<Constraint> rows_;
};

}  // namespace arrhom
