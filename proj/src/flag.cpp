#include "arrhom/flag.hpp"

#include <algorithm>

#include "arrhom/errors.hpp"
#include "arrhom/feasible.hpp"

namespace arrhom {

namespace {

void check_flag_shape(const Arrangement& arr, const OrientedFlag& flag) {
  const int d = arr.dim();
  if (flag.base.size() != d || flag.basis.rows() != d ||
      flag.basis.cols() != d) {
    throw input_error("flag shape does not match the ambient dimension");
  }
  if (rank_of(flag.basis) != d) {
    throw input_error("flag basis is singular");
  }
}

}  // namespace

bool flag_is_generic(const Arrangement& arr, const IntersectionLattice& lat,
                     const OrientedFlag& flag) {
  check_flag_shape(arr, flag);
  const int d = arr.dim();
  for (const Flat& f : lat.flats()) {
    if (f.rank == 0) continue;
    const int r = static_cast<int>(f.eqs.rows());
    RMat normals(r, d);
    RVec rhs(r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < d; ++j) normals(i, j) = f.eqs(i, j);
      rhs[i] = -f.eqs(i, d);
    }
    rhs -= normals * flag.base;
    for (int k = 0; k < d; ++k) {
      RMat m = normals * flag.basis.leftCols(k);
      if (k < f.rank) {
        if (solve(m, rhs)) return false;  // F^k must miss the flat
      } else {
        if (rank_of(m) != f.rank) return false;  // transversal intersection
      }
    }
  }
  return true;
}

OrientedFlag build_flag(const Arrangement& arr, const IntersectionLattice& lat,
                        unsigned seed) {
  const int d = arr.dim();
  // Deterministic rejection sampling. Independent draws for every entry (with
  // a range that grows per attempt) leave no algebraic relation between base
  // and basis that a fixed arrangement could defeat on every attempt.
  uint64_t state = (uint64_t{seed} + 1) * 0x9E3779B97F4A7C15ULL;
  const auto draw = [&state](long long bound) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const auto span = static_cast<uint64_t>(2 * bound + 1);
    return static_cast<long long>((state >> 33) % span) - bound;
  };
  for (int attempt = 0; attempt < 500; ++attempt) {
    const long long bound = 8 + 8LL * attempt;
    OrientedFlag flag;
    flag.basis = RMat(d, d);
    for (int k = 0; k < d; ++k) {
      for (int row = 0; row < d; ++row) {
        flag.basis(row, k) = Rational(draw(bound));
      }
    }
    if (rank_of(flag.basis) != d) continue;
    flag.base = RVec(d);
    for (int row = 0; row < d; ++row) flag.base[row] = Rational(draw(bound));
    if (flag_is_generic(arr, lat, flag)) return flag;
  }
  throw invariant_violation("no generic flag found after 500 attempts");
}

Arrangement flag_section(const Arrangement& arr, const OrientedFlag& flag,
                         int k) {
  if (k < 1 || k > arr.dim()) {
    throw input_error("flag section level out of range");
  }
  RMat v = flag.basis.leftCols(k);
  std::vector<Hyperplane> rows;
  rows.reserve(arr.size());
  for (int i = 0; i < arr.size(); ++i) {
    const Hyperplane& h = arr.hyperplane(i);
    rows.push_back({v.transpose() * h.normal, h.value_at(flag.base)});
  }
  return Arrangement(k, rows);
}

ChamberLevels partition_chambers(const Arrangement& arr,
                                 const OrientedFlag& flag,
                                 const std::vector<Chamber>& chambers) {
  check_flag_shape(arr, flag);
  const int d = arr.dim();
  const int m = static_cast<int>(chambers.size());

  std::vector<Arrangement> sections;
  sections.reserve(d);
  for (int k = 1; k <= d; ++k) {
    sections.push_back(flag_section(arr, flag, k));
  }

  const SignVector base_sv = arr.sign_vector_at(flag.base);
  for (int8_t s : base_sv) {
    if (s == 0) {
      throw input_error("flag base point lies on a hyperplane");
    }
  }

  ChamberLevels out;
  out.level.assign(m, -1);
  out.sign.assign(m, 0);
  out.section_sample.assign(m, RVec());
  out.by_level.assign(d + 1, {});

  for (int ci = 0; ci < m; ++ci) {
    if (chambers[ci].sv == base_sv) {
      out.level[ci] = 0;
      out.sign[ci] = 1;
      out.by_level[0].push_back(ci);
      continue;
    }
    for (int k = 1; k <= d; ++k) {
      LinearSystem sys(k);
      sys.add_sign_vector(sections[k - 1], chambers[ci].sv);
      auto y = sys.sample();
      if (!y) continue;
      const int s = (*y)[k - 1].sign();
      if (s == 0) {
        throw invariant_violation(
            "level witness lies in the previous flag subspace");
      }
      out.level[ci] = k;
      out.sign[ci] = s;
      out.section_sample[ci] = std::move(*y);
      out.by_level[k].push_back(ci);
      break;
    }
    if (out.level[ci] < 0) {
      throw invariant_violation("chamber not reachable from the flag");
    }
  }

  if (out.by_level[0].size() != 1) {
    throw invariant_violation("flag base point must sit in exactly one chamber");
  }
  std::sort(out.by_level[1].begin(), out.by_level[1].end(),
            [&](int a, int b) {
              return out.section_sample[a][0] < out.section_sample[b][0];
            });
  return out;
}

}  // namespace arrhom
