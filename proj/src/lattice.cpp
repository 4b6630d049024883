#include "arrhom/lattice.hpp"

#include <algorithm>
#include <map>

#include "arrhom/errors.hpp"

namespace arrhom {

namespace {

RMat augmented_row(const Hyperplane& h, int dim) {
  RMat row(1, dim + 1);
  for (int j = 0; j < dim; ++j) row(0, j) = h.normal[j];
  row(0, dim) = h.offset;
  return row;
}

RMat stack(const RMat& top, const RMat& bottom) {
  RMat out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

// Rank of the coefficient part of an RREF'd augmented matrix; the system is
// inconsistent exactly when some row has zero coefficients and a nonzero
// constant, i.e. when the full rank exceeds it.
int coefficient_rank(const RMat& rref, int dim) {
  int r = 0;
  for (int i = 0; i < rref.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < dim; ++j) {
      if (!rref(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) ++r;
  }
  return r;
}

bool consistent(const RMat& rref, int dim) {
  for (int i = 0; i < rref.rows(); ++i) {
    bool coef_zero = true;
    for (int j = 0; j < dim; ++j) {
      if (!rref(i, j).is_zero()) {
        coef_zero = false;
        break;
      }
    }
    if (coef_zero && !rref(i, dim).is_zero()) return false;
  }
  return true;
}

RMat drop_zero_rows(const RMat& m) {
  std::vector<int> keep;
  for (int i = 0; i < m.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) keep.push_back(i);
  }
  RMat out(static_cast<int>(keep.size()), m.cols());
  for (int i = 0; i < out.rows(); ++i) out.row(i) = m.row(keep[i]);
  return out;
}

// Solve the system encoded by RREF'd augmented rows for one point.
RVec point_on(const RMat& rref, int dim) {
  RMat a(rref.rows(), dim);
  RVec b(rref.rows());
  for (int i = 0; i < rref.rows(); ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = rref(i, j);
    b[i] = -rref(i, dim);
  }
  auto x = solve(a, b);
  if (!x) throw invariant_violation("flat system has no solution");
  return *x;
}

// True when the hyperplane contains the flat given by RREF'd augmented rows:
// its own augmented row lies in their row space.
bool row_in_span(const RMat& rref, const Hyperplane& h, int dim) {
  RMat ext = stack(rref, augmented_row(h, dim));
  return rank_of(ext) == rref.rows();
}

}  // namespace

IntersectionLattice IntersectionLattice::build(const Arrangement& arr) {
  const int dim = arr.dim();
  const int n = arr.size();

  IntersectionLattice lat;
  lat.dim_ = dim;

  Flat ambient;
  ambient.rank = 0;
  ambient.contains = 0;
  ambient.point = RVec::Zero(dim);
  ambient.eqs = RMat(0, dim + 1);
  lat.flats_.push_back(ambient);

  std::map<uint64_t, int> index_of;
  index_of[0] = 0;

  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int fi : frontier) {
      // Copy: flats_ may reallocate while we append.
      const Flat base = lat.flats_[fi];
      for (int i = 0; i < n; ++i) {
        if (base.contains & (uint64_t{1} << i)) continue;
        RMat ext = stack(base.eqs, augmented_row(arr.hyperplane(i), dim));
        rref_in_place(ext);
        ext = drop_zero_rows(ext);
        if (!consistent(ext, dim)) continue;  // empty intersection
        int r = coefficient_rank(ext, dim);
        if (r != base.rank + 1) {
          throw invariant_violation("flat rank did not increase by one");
        }

        uint64_t mask = 0;
        for (int j = 0; j < n; ++j) {
          if (row_in_span(ext, arr.hyperplane(j), dim)) {
            mask |= uint64_t{1} << j;
          }
        }
        if (!(mask & (uint64_t{1} << i))) {
          throw invariant_violation("flat mask misses a defining hyperplane");
        }
        if (index_of.count(mask)) continue;

        Flat f;
        f.rank = r;
        f.contains = mask;
        f.eqs = ext;
        f.point = point_on(ext, dim);
        index_of[mask] = static_cast<int>(lat.flats_.size());
        next.push_back(static_cast<int>(lat.flats_.size()));
        lat.flats_.push_back(std::move(f));
      }
    }
    frontier = std::move(next);
  }

  std::sort(lat.flats_.begin(), lat.flats_.end(),
            [](const Flat& a, const Flat& b) {
              if (a.rank != b.rank) return a.rank < b.rank;
              return a.contains < b.contains;
            });

  // Möbius function by the defining recursion down the (rank-sorted) list.
  for (size_t i = 0; i < lat.flats_.size(); ++i) {
    if (i == 0) {
      lat.flats_[i].mobius = 1;
      continue;
    }
    Int acc = 0;
    for (size_t j = 0; j < i; ++j) {
      const uint64_t cj = lat.flats_[j].contains;
      if ((cj & lat.flats_[i].contains) == cj) acc += lat.flats_[j].mobius;
    }
    lat.flats_[i].mobius = -acc;
  }

  // poincare[k] = sum over rank-k flats of mobius * (-1)^k.
  int top = 0;
  for (const Flat& f : lat.flats_) top = std::max(top, f.rank);
  lat.poincare_.assign(top + 1, Int(0));
  for (const Flat& f : lat.flats_) {
    Int term = f.mobius;
    if (f.rank % 2 != 0) term = -term;
    lat.poincare_[f.rank] += term;
  }
  for (const Int& c : lat.poincare_) {
    if (c < 0) throw invariant_violation("negative Poincaré coefficient");
  }
  return lat;
}

int IntersectionLattice::rank() const {
  int top = 0;
  for (const Flat& f : flats_) top = std::max(top, f.rank);
  return top;
}

Int IntersectionLattice::beta() const {
  Int value = 0;
  Int sign = 1;
  for (const Int& c : poincare_) {
    value += sign * c;
    sign = -sign;
  }
  return value < 0 ? Int(-value) : value;
}

FlatChart flat_chart(const Flat& flat, int dim) {
  const RMat& eqs = flat.eqs;  // RREF'd, full row rank
  const int r = static_cast<int>(eqs.rows());

  std::vector<int> pivot_col(r, -1);
  std::vector<bool> is_pivot(dim, false);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (!eqs(i, j).is_zero()) {
        pivot_col[i] = j;
        is_pivot[j] = true;
        break;
      }
    }
    if (pivot_col[i] < 0) {
      throw invariant_violation("flat equation row has no pivot");
    }
  }

  FlatChart chart;
  chart.base = RVec::Zero(dim);
  for (int i = 0; i < r; ++i) chart.base[pivot_col[i]] = -eqs(i, dim);

  chart.directions = RMat::Zero(dim, dim - r);
  int col = 0;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    chart.directions(f, col) = Rational(1);
    for (int i = 0; i < r; ++i) {
      chart.directions(pivot_col[i], col) = -eqs(i, f);
    }
    ++col;
  }
  return chart;
}

std::vector<Hyperplane> induced_rows(const Arrangement& arr,
                                     const FlatChart& chart) {
  const int k = static_cast<int>(chart.directions.cols());
  std::vector<Hyperplane> rows;
  for (int i = 0; i < arr.size(); ++i) {
    const Hyperplane& h = arr.hyperplane(i);
    RVec normal = chart.directions.transpose() * h.normal;
    bool zero = true;
    for (int j = 0; j < k; ++j) {
      if (!normal[j].is_zero()) {
        zero = false;
        break;
      }
    }
    if (zero) continue;  // contains the flat or misses it entirely
    rows.push_back({std::move(normal), h.value_at(chart.base)});
  }
  return rows;
}

Arrangement deletion(const Arrangement& arr, int i) {
  if (i < 0 || i >= arr.size()) throw input_error("deletion index out of range");
  std::vector<Hyperplane> rows;
  for (int j = 0; j < arr.size(); ++j) {
    if (j != i) rows.push_back(arr.hyperplane(j));
  }
  return Arrangement(arr.dim(), rows);
}

namespace {

bool projectively_equal(const Hyperplane& a, const Hyperplane& b) {
  const int d = static_cast<int>(a.normal.size());
  // Find a nonzero coordinate of a to anchor the ratio.
  int anchor = -1;
  for (int j = 0; j < d; ++j) {
    if (!a.normal[j].is_zero()) {
      anchor = j;
      break;
    }
  }
  Rational av = anchor >= 0 ? a.normal[anchor] : a.offset;
  Rational bv = anchor >= 0 ? b.normal[anchor] : b.offset;
  if (bv.is_zero()) return false;
  for (int j = 0; j < d; ++j) {
    if (a.normal[j] * bv != b.normal[j] * av) return false;
  }
  return a.offset * bv == b.offset * av;
}

}  // namespace

Arrangement restriction(const Arrangement& arr, int i) {
  if (i < 0 || i >= arr.size()) {
    throw input_error("restriction index out of range");
  }
  if (arr.dim() < 2) {
    throw input_error("restriction needs ambient dimension at least 2");
  }
  Flat f;
  f.rank = 1;
  f.eqs = RMat(1, arr.dim() + 1);
  const Hyperplane& h = arr.hyperplane(i);
  for (int j = 0; j < arr.dim(); ++j) f.eqs(0, j) = h.normal[j];
  f.eqs(0, arr.dim()) = h.offset;
  rref_in_place(f.eqs);

  FlatChart chart = flat_chart(f, arr.dim());
  std::vector<Hyperplane> rows;
  for (const Hyperplane& cand : induced_rows(arr, chart)) {
    bool dup = false;
    for (const Hyperplane& kept : rows) {
      if (projectively_equal(kept, cand)) {
        dup = true;
        break;
      }
    }
    if (!dup) rows.push_back(cand);
  }
  return Arrangement(arr.dim() - 1, rows);
}

}  // namespace arrhom
