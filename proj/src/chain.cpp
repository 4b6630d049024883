#include "arrhom/chain.hpp"

#include "arrhom/degree.hpp"
#include "arrhom/errors.hpp"

namespace arrhom {

ChainComplex build_complex(const Arrangement& arr,
                           const IntersectionLattice& lat,
                           const OrientedFlag& flag,
                           const std::vector<Chamber>& chambers) {
  const int ell = arr.dim();
  if (ell > 3) {
    throw unsupported_dimension(
        "chain complexes are implemented for ambient dimension at most 3");
  }
  if (!flag_is_generic(arr, lat, flag)) {
    throw input_error("flag is not generic for this arrangement");
  }

  ChamberLevels levels = partition_chambers(arr, flag, chambers);

  ChainComplex cc;
  cc.ell = ell;
  cc.n = arr.size();
  cc.chambers = chambers;
  cc.sign = levels.sign;
  cc.basis.assign(ell + 1, {});
  for (int k = 0; k <= ell; ++k) cc.basis[k] = levels.by_level[k];
  cc.boundary.assign(ell + 1, LaurentMat{});

  for (int k = 1; k <= ell; ++k) {
    const auto& cols = cc.basis[k];
    const auto& rows = cc.basis[k - 1];
    LaurentMat mat(rows.size(),
                   std::vector<LaurentPoly>(cols.size(), LaurentPoly(cc.n)));
    if (!cols.empty() && !rows.empty()) {
      const Arrangement section = flag_section(arr, flag, k);
      for (size_t j = 0; j < cols.size(); ++j) {
        const Chamber& cell = chambers[cols[j]];
        const int cell_sign = levels.sign[cols[j]];
        for (size_t i = 0; i < rows.size(); ++i) {
          const Chamber& target = chambers[rows[i]];
          const int deg = cell_degree(section, k, cell.sv, target.sv);
          if (deg == 0) continue;
          LaurentPoly entry =
              skein(cc.n, separating_set(cell.sv, target.sv));
          const int scale = -cell_sign * deg;
          if (scale != 1) {
            entry = LaurentPoly::constant(cc.n, Int(scale)) * entry;
          }
          mat[i][j] = std::move(entry);
        }
      }
    }
    cc.boundary[k] = std::move(mat);
  }
  return cc;
}

bool boundary_squares_to_zero(const ChainComplex& cc) {
  for (int k = 1; k + 1 <= cc.ell; ++k) {
    if (cc.basis[k - 1].empty() || cc.basis[k].empty() ||
        cc.basis[k + 1].empty()) {
      continue;
    }
    if (!laurent_is_zero(laurent_mul(cc.boundary[k], cc.boundary[k + 1]))) {
      return false;
    }
  }
  return true;
}

std::vector<int> homology_dims(const ChainComplex& cc,
                               const std::vector<Rational>& q) {
  if (static_cast<int>(q.size()) != cc.n) {
    throw input_error("weight vector length does not match the arrangement");
  }
  for (const Rational& w : q) {
    if (w.is_zero()) throw input_error("weights must be nonzero");
  }

  std::vector<int> rank(cc.ell + 2, 0);
  for (int k = 1; k <= cc.ell; ++k) {
    const size_t rows = cc.basis[k - 1].size();
    const size_t cols = cc.basis[k].size();
    if (rows == 0 || cols == 0) continue;
    RMat m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        m(static_cast<int>(i), static_cast<int>(j)) =
            cc.boundary[k][i][j].evaluate(q);
      }
    }
    rank[k] = rank_of(std::move(m));
  }

  std::vector<int> dims(cc.ell + 1, 0);
  for (int k = 0; k <= cc.ell; ++k) {
    dims[k] = static_cast<int>(cc.basis[k].size()) - rank[k] - rank[k + 1];
    if (dims[k] < 0) {
      throw invariant_violation("negative homology dimension");
    }
  }
  return dims;
}

std::vector<Rational> generic_probe(int n) {
  std::vector<Rational> q;
  q.reserve(n);
  int candidate = 2;
  while (static_cast<int>(q.size()) < n) {
    bool prime = true;
    for (int d = 2; d * d <= candidate; ++d) {
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) q.push_back(Rational(candidate));
    ++candidate;
  }
  return q;
}

bool is_resonant(const ChainComplex& cc, const std::vector<Rational>& q) {
  return homology_dims(cc, q) != homology_dims(cc, generic_probe(cc.n));
}

}  // namespace arrhom
