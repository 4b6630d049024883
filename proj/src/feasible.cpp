#include "arrhom/feasible.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_set>

#include "arrhom/errors.hpp"

namespace arrhom {

namespace {

struct Row {
  RVec v;  // size dim + 1
  Rel rel;
};

// x_var = expr . (x, 1), where expr[var] == 0.
struct Substitution {
  int var;
  RVec expr;
};

// Rows whose relations mention `var`, captured just before it is eliminated.
struct EliminationLevel {
  int var;
  std::vector<Row> involved;
};

// Scale so the first nonzero entry has absolute value 1; for equalities also
// force it positive (an equality row and its negation are the same relation).
void normalize_row(Row& r) {
  const int n = static_cast<int>(r.v.size());
  for (int i = 0; i < n; ++i) {
    if (!r.v[i].is_zero()) {
      Rational scale = abs(r.v[i]);
      for (int j = i; j < n; ++j) r.v[j] /= scale;
      if (r.rel == Rel::eq && r.v[i].sign() < 0) {
        for (int j = i; j < n; ++j) r.v[j] = -r.v[j];
      }
      return;
    }
  }
}

std::string row_key(const Row& r) {
  std::ostringstream os;
  os << static_cast<int>(r.rel) << '|';
  for (int i = 0; i < r.v.size(); ++i) os << r.v[i] << ',';
  return os.str();
}

// True (still feasible) if a constant-only row holds; the row is consumed.
bool constant_row_holds(const Row& r, int dim) {
  int s = r.v[dim].sign();
  switch (r.rel) {
    case Rel::eq:
      return s == 0;
    case Rel::ge:
      return s >= 0;
    case Rel::gt:
      return s > 0;
  }
  return false;  // unreachable
}

bool is_constant_row(const Row& r, int dim) {
  for (int j = 0; j < dim; ++j) {
    if (!r.v[j].is_zero()) return false;
  }
  return true;
}

// Core elimination. Returns false on infeasibility; on success fills the
// substitution and level records needed to reconstruct a witness point.
bool eliminate(int dim, std::vector<Row> rows, std::vector<Substitution>& substs,
               std::vector<EliminationLevel>& levels) {
  std::vector<bool> active(dim, true);

  // Phase 1: consume equality rows by substitution.
  for (;;) {
    int eq_idx = -1;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i].rel == Rel::eq) {
        eq_idx = i;
        break;
      }
    }
    if (eq_idx < 0) break;
    Row eq = rows[eq_idx];
    rows.erase(rows.begin() + eq_idx);

    // Pivot: largest |coefficient| among active variables, ties to the
    // lowest index. Deterministic and keeps the arithmetic tame.
    int pivot = -1;
    for (int j = 0; j < dim; ++j) {
      if (!active[j] || eq.v[j].is_zero()) continue;
      if (pivot < 0 || abs(eq.v[j]) > abs(eq.v[pivot])) pivot = j;
    }
    if (pivot < 0) {
      if (eq.v[dim].sign() != 0) return false;
      continue;  // 0 == 0
    }

    // x_pivot = expr . (x, 1)
    RVec expr = RVec::Zero(dim + 1);
    for (int j = 0; j <= dim; ++j) {
      if (j == pivot) continue;
      expr[j] = -eq.v[j] / eq.v[pivot];
    }
    for (Row& r : rows) {
      if (r.v[pivot].is_zero()) continue;
      Rational c = r.v[pivot];
      r.v[pivot] = Rational(0);
      for (int j = 0; j <= dim; ++j) r.v[j] += c * expr[j];
    }
    active[pivot] = false;
    substs.push_back({pivot, expr});
  }

  // Sweep out rows that became constant; detect contradictions early.
  {
    std::vector<Row> kept;
    kept.reserve(rows.size());
    for (Row& r : rows) {
      if (is_constant_row(r, dim)) {
        if (!constant_row_holds(r, dim)) return false;
      } else {
        kept.push_back(std::move(r));
      }
    }
    rows = std::move(kept);
  }

  // Phase 2: Fourier–Motzkin, eliminating the highest-index variable first.
  for (int var = dim - 1; var >= 0; --var) {
    if (!active[var]) continue;
    std::vector<Row> lower, upper, rest;
    for (Row& r : rows) {
      int s = r.v[var].sign();
      if (s > 0) {
        lower.push_back(std::move(r));  // x_var >(=) -rest / coef
      } else if (s < 0) {
        upper.push_back(std::move(r));
      } else {
        rest.push_back(std::move(r));
      }
    }
    EliminationLevel level;
    level.var = var;
    level.involved.reserve(lower.size() + upper.size());
    for (const Row& r : lower) level.involved.push_back(r);
    for (const Row& r : upper) level.involved.push_back(r);
    levels.push_back(std::move(level));

    std::vector<Row> next = std::move(rest);
    std::unordered_set<std::string> seen;
    for (Row& r : next) {
      normalize_row(r);
      seen.insert(row_key(r));
    }
    for (const Row& lo : lower) {
      for (const Row& up : upper) {
        Row combined;
        combined.v = lo.v * (-up.v[var]) + up.v * lo.v[var];
        combined.v[var] = Rational(0);
        combined.rel =
            (lo.rel == Rel::gt || up.rel == Rel::gt) ? Rel::gt : Rel::ge;
        if (is_constant_row(combined, dim)) {
          if (!constant_row_holds(combined, dim)) return false;
          continue;
        }
        normalize_row(combined);
        if (seen.insert(row_key(combined)).second) {
          next.push_back(std::move(combined));
        }
      }
    }
    rows = std::move(next);
  }

  // Only constant rows can be left.
  for (const Row& r : rows) {
    if (!is_constant_row(r, dim) || !constant_row_holds(r, dim)) {
      throw invariant_violation("elimination left a non-constant row");
    }
  }
  return true;
}

std::vector<Row> to_rows(const std::vector<Constraint>& cs) {
  std::vector<Row> rows;
  rows.reserve(cs.size());
  for (const Constraint& c : cs) rows.push_back({c.row, c.rel});
  return rows;
}

}  // namespace

LinearSystem::LinearSystem(int dim) : dim_(dim) {
  if (dim < 0) throw input_error("linear system dimension must be >= 0");
}

void LinearSystem::add(const RVec& coeffs, const Rational& constant, Rel rel) {
  if (coeffs.size() != dim_) {
    throw input_error("constraint has wrong dimension");
  }
  RVec row(dim_ + 1);
  row.head(dim_) = coeffs;
  row[dim_] = constant;
  rows_.push_back({std::move(row), rel});
}

void LinearSystem::add_hyperplane_sign(const Hyperplane& h, int sign) {
  if (sign == 0) {
    add(h.normal, h.offset, Rel::eq);
  } else if (sign > 0) {
    add(h.normal, h.offset, Rel::gt);
  } else {
    add(-h.normal, -h.offset, Rel::gt);
  }
}

void LinearSystem::add_sign_vector(const Arrangement& arr,
                                   const SignVector& sv) {
  if (static_cast<int>(sv.size()) != arr.size()) {
    throw input_error("sign vector length does not match arrangement");
  }
  for (int i = 0; i < arr.size(); ++i) {
    add_hyperplane_sign(arr.hyperplane(i), sv[i]);
  }
}

bool LinearSystem::feasible() const {
  std::vector<Substitution> substs;
  std::vector<EliminationLevel> levels;
  return eliminate(dim_, to_rows(rows_), substs, levels);
}

std::optional<RVec> LinearSystem::sample(int variant) const {
  std::vector<Substitution> substs;
  std::vector<EliminationLevel> levels;
  if (!eliminate(dim_, to_rows(rows_), substs, levels)) return std::nullopt;

  std::vector<bool> have(dim_, false);
  RVec x = RVec::Zero(dim_);

  // Free variables (never substituted, never bounded) default to 0; levels
  // are resolved from the last-eliminated variable back to the first, so a
  // level only ever refers to variables that already have values.
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const int var = it->var;
    bool has_lo = false, has_hi = false, lo_open = false, hi_open = false;
    Rational lo, hi;
    for (const Row& r : it->involved) {
      Rational rest = r.v[dim_];
      for (int j = 0; j < dim_; ++j) {
        if (j == var || r.v[j].is_zero()) continue;
        if (!have[j]) {
          throw invariant_violation("back-substitution order violated");
        }
        rest += r.v[j] * x[j];
      }
      Rational bound = -rest / r.v[var];
      bool open = r.rel == Rel::gt;
      if (r.v[var].sign() > 0) {
        if (!has_lo || bound > lo || (bound == lo && open)) {
          has_lo = true;
          lo = bound;
          lo_open = open;
        }
      } else {
        if (!has_hi || bound < hi || (bound == hi && open)) {
          has_hi = true;
          hi = bound;
          hi_open = open;
        }
      }
    }
    Rational value;
    if (has_lo && has_hi) {
      if (lo > hi || (lo == hi && (lo_open || hi_open))) {
        throw invariant_violation("empty interval after feasible elimination");
      }
      value = variant == 0 ? (lo + hi) / Rational(2)
                           : lo + (hi - lo) / Rational(4);
    } else if (has_lo) {
      value = lo + Rational(variant == 0 ? 1 : 2);
    } else if (has_hi) {
      value = hi - Rational(variant == 0 ? 1 : 2);
    } else {
      value = Rational(variant == 0 ? 0 : 1);
    }
    x[var] = value;
    have[var] = true;
  }

  // Substituted variables, most recent first (their expressions only involve
  // variables that survive to later stages).
  for (auto it = substs.rbegin(); it != substs.rend(); ++it) {
    Rational value = it->expr[dim_];
    for (int j = 0; j < dim_; ++j) {
      if (it->expr[j].is_zero()) continue;
      if (!have[j]) {
        throw invariant_violation("substitution replay order violated");
      }
      value += it->expr[j] * x[j];
    }
    x[it->var] = value;
    have[it->var] = true;
  }

  return x;
}

}  // namespace arrhom
