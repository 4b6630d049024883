// fixtures.hpp — shared arrangements, flags, and deterministic randomness.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/errors.hpp"
#include "arrhom/flag.hpp"

namespace fixtures {

using namespace arrhom;

inline RVec vec(std::initializer_list<Rational> entries) {
  RVec v(static_cast<int>(entries.size()));
  int i = 0;
  for (const Rational& e : entries) v(i++) = e;
  return v;
}

// row = [a_1..a_d, b] for a.x + b = 0.
inline Hyperplane plane(std::initializer_list<Rational> row) {
  RVec coeffs = vec(row);
  Hyperplane h;
  h.normal = coeffs.head(coeffs.size() - 1);
  h.offset = coeffs(coeffs.size() - 1);
  return h;
}

inline Arrangement make_arr(int dim,
                            std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Hyperplane> planes;
  for (const auto& row : rows) planes.push_back(plane(row));
  return Arrangement(dim, std::move(planes));
}

inline OrientedFlag make_flag(std::initializer_list<Rational> base,
                              std::initializer_list<std::initializer_list<Rational>> basis) {
  OrientedFlag flag;
  flag.base = vec(base);
  const int d = flag.base.size();
  flag.basis = RMat(d, d);
  int k = 0;
  for (const auto& col : basis) {
    flag.basis.col(k++) = vec(col);
  }
  return flag;
}

// --- Plane fixtures (dim 2) -------------------------------------------------

// Three lines in general position bounding a central triangle.
inline Arrangement triangle() {
  return make_arr(2, {{17, -28, -1190}, {4, 1, -800}, {2, 3, -700}});
}
inline OrientedFlag triangle_flag() {
  return make_flag({140, 20}, {{1, 0}, {0, 1}});
}

// Another generic triple, with a skewed flag direction.
inline Arrangement skew_triangle() {
  return make_arr(2, {{-1, 1, 0}, {1, 1, -200}, {1, 0, -50}});
}
inline OrientedFlag skew_flag() {
  return make_flag({100, 75}, {{4, 1}, {0, 1}});
}

// Two crossing lines.
inline Arrangement cross() {
  return make_arr(2, {{-1, 1, Rational(-1, 2)}, {1, 1, Rational(-1, 2)}});
}
inline OrientedFlag cross_flag() {
  return make_flag({0, 0}, {{1, 0}, {0, 1}});
}

// Three concurrent lines (a central pencil).
inline Arrangement pencil3() {
  return make_arr(2, {{17, -28, 0}, {4, 1, 0}, {2, 3, 0}});
}
inline OrientedFlag pencil3_flag() {
  return make_flag({1, 20}, {{1, 0}, {0, 1}});
}

inline Arrangement single_line() { return make_arr(2, {{1, 0, 0}}); }
inline OrientedFlag single_line_flag() {
  return make_flag({1, 1}, {{1, 0}, {0, 1}});
}

inline Arrangement parallel_pair() {
  return make_arr(2, {{1, 0, 0}, {1, 0, -1}});
}
inline OrientedFlag parallel_pair_flag() {
  return make_flag({3, 1}, {{1, 0}, {0, 1}});
}

// --- Space fixtures (dim 3) -------------------------------------------------

inline Arrangement boolean3() {
  return make_arr(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
}

inline Arrangement generic4() {
  return make_arr(3, {{1, 0, 0, -1},
                      {0, 1, 0, -1},
                      {0, 0, 1, -1},
                      {1, 1, 1, -1}});
}

// --- Deterministic randomness ------------------------------------------------

struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed * 2654435761ULL + 0x9E3779B97F4A7C15ULL) {}
  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

// Random arrangement with small integer coefficients; rows that would be
// rejected (zero normal, projective duplicate) are redrawn, so the result is
// always valid. May return fewer than n rows only on pathological seeds.
inline Arrangement random_arrangement(uint64_t seed, int dim, int n) {
  Rng rng(seed);
  std::vector<Hyperplane> rows;
  int guard = 0;
  while (static_cast<int>(rows.size()) < n && ++guard < 4000) {
    Hyperplane h;
    h.normal = RVec(dim);
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      const long long c = rng.range(-3, 3);
      h.normal(i) = Rational(c);
      if (c != 0) zero = false;
    }
    if (zero) continue;
    h.offset = Rational(rng.range(-4, 4));
    std::vector<Hyperplane> candidate = rows;
    candidate.push_back(h);
    try {
      Arrangement probe(dim, candidate);
      rows = std::move(candidate);
    } catch (const input_error&) {
      // duplicate direction; redraw
    }
  }
  return Arrangement(dim, rows);
}

// Nonzero rational weights, one per hyperplane.
inline std::vector<Rational> random_weights(uint64_t seed, int n) {
  Rng rng(seed ^ 0xABCDEF12345ULL);
  std::vector<Rational> q;
  for (int i = 0; i < n; ++i) {
    long long num = 0;
    while (num == 0) num = rng.range(-4, 4);
    long long den = rng.range(1, 4);
    q.emplace_back(Int(num), Int(den));
  }
  return q;
}

}  // namespace fixtures
