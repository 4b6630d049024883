#include "arrhom/degree.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "arrhom/errors.hpp"
#include "arrhom/feasible.hpp"

namespace arrhom {

namespace {

Rational cross2(const RVec& a, const RVec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

Rational dot2(const RVec& a, const RVec& b) {
  return a[0] * b[0] + a[1] * b[1];
}

RVec vec2(Rational x, Rational y) {
  RVec v(2);
  v[0] = std::move(x);
  v[1] = std::move(y);
  return v;
}

int degree_level2(const Arrangement& section, const SignVector& sv_cell,
                  const SignVector& sv_target, const DegreeOptions& options) {
  const int n = section.size();

  // Clip bound: strictly beyond every crossing of a row with the y_2 = 0
  // line (L1 norm dominates the coordinate).
  Rational max_norm(0);
  for (int i = 0; i < n; ++i) {
    const Hyperplane& h = section.hyperplane(i);
    if (h.normal[0].is_zero()) continue;
    Rational crossing = abs(h.offset / h.normal[0]);
    if (crossing > max_norm) max_norm = crossing;
  }
  const Rational clip =
      options.clip_scale * Rational(2) * (max_norm + Rational(1));

  constexpr int kLeftClip = -1, kRightClip = -2;
  Rational lo = -clip, hi = clip;
  int lo_id = kLeftClip, hi_id = kRightClip;
  for (int i = 0; i < n; ++i) {
    const Hyperplane& h = section.hyperplane(i);
    const Rational& slope = h.normal[0];
    if (slope.is_zero()) {
      // Constant along the line; the target keeps its sign there.
      if (h.offset.sign() != sv_target[i]) {
        throw invariant_violation("target chamber does not meet the flag line");
      }
      continue;
    }
    const Rational bound = -h.offset / slope;
    if (slope.sign() * sv_target[i] > 0) {
      if (bound > lo) {
        lo = bound;
        lo_id = i;
      }
    } else {
      if (bound < hi) {
        hi = bound;
        hi_id = i;
      }
    }
  }
  if (!(lo < hi)) {
    throw invariant_violation("target trace on the flag line is empty");
  }

  const int u_lo = lo_id == kLeftClip
                       ? 1
                       : sv_cell[lo_id] * section.hyperplane(lo_id).normal[0].sign();
  const int u_hi = hi_id == kRightClip
                       ? -1
                       : sv_cell[hi_id] * section.hyperplane(hi_id).normal[0].sign();
  return (u_hi - u_lo) / 2;
}

// One boundary constraint of the clipped polygon, written value(y) >= 0.
struct PolyConstraint {
  RVec grad;   // 2D
  Rational c;  // value = grad . y + c
  int row;     // hyperplane index, or -1 for a box edge
};

int degree_level3(const Arrangement& section, const SignVector& sv_cell,
                  const SignVector& sv_target, const DegreeOptions& options,
                  Level3Trace* trace) {
  const int n = section.size();

  // In-plane restrictions of the rows to y_3 = 0.
  std::vector<Hyperplane> rows2;
  rows2.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Hyperplane& h = section.hyperplane(i);
    RVec g = vec2(h.normal[0], h.normal[1]);
    if (g[0].is_zero() && g[1].is_zero()) {
      throw invariant_violation("section row degenerates on the flag plane");
    }
    rows2.push_back({std::move(g), h.offset});
  }

  // Clip box half-width: beyond the origin, one anchor point per row, and
  // every pairwise crossing; then nudged so no row passes through a box
  // corner or coincides with a box edge line.
  Rational max_norm(0);
  auto fold_point = [&max_norm](const Rational& x, const Rational& y) {
    Rational norm = abs(x) + abs(y);
    if (norm > max_norm) max_norm = norm;
  };
  for (const Hyperplane& h : rows2) {
    if (!h.normal[1].is_zero()) {
      fold_point(Rational(0), -h.offset / h.normal[1]);
    } else {
      fold_point(-h.offset / h.normal[0], Rational(0));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const RVec& a = rows2[i].normal;
      const RVec& b = rows2[j].normal;
      const Rational det = cross2(a, b);
      if (det.is_zero()) continue;
      const Rational x =
          (-rows2[i].offset * b[1] + rows2[j].offset * a[1]) / det;
      const Rational y =
          (rows2[i].offset * b[0] - rows2[j].offset * a[0]) / det;
      fold_point(x, y);
    }
  }
  Rational clip = options.clip_scale * Rational(2) * (max_norm + Rational(1));
  for (bool adjusted = true; adjusted;) {
    adjusted = false;
    for (const Hyperplane& h : rows2) {
      const Rational& g1 = h.normal[0];
      const Rational& g2 = h.normal[1];
      bool bad = false;
      for (int sx : {-1, 1}) {
        for (int sy : {-1, 1}) {
          if ((g1 * Rational(sx) + g2 * Rational(sy)) * clip + h.offset ==
              Rational(0)) {
            bad = true;
          }
        }
      }
      if (g2.is_zero() && abs(-h.offset / g1) == clip) bad = true;
      if (g1.is_zero() && abs(-h.offset / g2) == clip) bad = true;
      if (bad) {
        clip += Rational(1);
        adjusted = true;
        break;
      }
    }
  }

  // Polygon P = closure(target trace) intersect box.
  std::vector<PolyConstraint> cons;
  for (int i = 0; i < n; ++i) {
    const int s = sv_target[i];
    cons.push_back({vec2(Rational(s) * rows2[i].normal[0],
                         Rational(s) * rows2[i].normal[1]),
                    Rational(s) * rows2[i].offset, i});
  }
  cons.push_back({vec2(Rational(1), Rational(0)), clip, -1});   // y1 >= -R
  cons.push_back({vec2(Rational(-1), Rational(0)), clip, -1});  // y1 <= R
  cons.push_back({vec2(Rational(0), Rational(1)), clip, -1});   // y2 >= -R
  cons.push_back({vec2(Rational(0), Rational(-1)), clip, -1});  // y2 <= R
  const int nc = static_cast<int>(cons.size());

  auto value_at = [&](const PolyConstraint& pc, const RVec& p) {
    return dot2(pc.grad, p) + pc.c;
  };

  std::vector<RVec> vertices;
  for (int p = 0; p < nc; ++p) {
    for (int q = p + 1; q < nc; ++q) {
      const Rational det = cross2(cons[p].grad, cons[q].grad);
      if (det.is_zero()) continue;
      const Rational x =
          (-cons[p].c * cons[q].grad[1] + cons[q].c * cons[p].grad[1]) / det;
      const Rational y =
          (cons[p].c * cons[q].grad[0] - cons[q].c * cons[p].grad[0]) / det;
      RVec v = vec2(x, y);
      bool inside = true;
      for (int r = 0; r < nc && inside; ++r) {
        if (value_at(cons[r], v).sign() < 0) inside = false;
      }
      if (!inside) continue;
      bool seen = false;
      for (const RVec& w : vertices) {
        if (w[0] == v[0] && w[1] == v[1]) {
          seen = true;
          break;
        }
      }
      if (!seen) vertices.push_back(std::move(v));
    }
  }
  if (vertices.size() < 3) {
    throw invariant_violation("clipped target trace is degenerate");
  }

  // Interior witness, used to order the vertices counterclockwise.
  RVec center;
  {
    LinearSystem sys(2);
    for (const PolyConstraint& pc : cons) {
      sys.add(pc.grad, pc.c, Rel::gt);
    }
    auto z = sys.sample(options.witness_variant);
    if (!z) {
      throw invariant_violation("clipped target trace has no interior");
    }
    center = std::move(*z);
  }

  auto angle_less = [&center](const RVec& a, const RVec& b) {
    const RVec u = vec2(a[0] - center[0], a[1] - center[1]);
    const RVec v = vec2(b[0] - center[0], b[1] - center[1]);
    const int hu = (u[1].sign() > 0 || (u[1].sign() == 0 && u[0].sign() > 0))
                       ? 0
                       : 1;
    const int hv = (v[1].sign() > 0 || (v[1].sign() == 0 && v[0].sign() > 0))
                       ? 0
                       : 1;
    if (hu != hv) return hu < hv;
    return cross2(u, v).sign() > 0;
  };
  std::sort(vertices.begin(), vertices.end(), angle_less);

  const int m = static_cast<int>(vertices.size());
  auto active_at = [&](const RVec& v) {
    std::vector<int> act;
    for (int r = 0; r < nc; ++r) {
      if (value_at(cons[r], v).is_zero()) act.push_back(r);
    }
    return act;
  };

  // Supporting constraint of each edge: active at both endpoints.
  std::vector<int> edge_con(m, -1);
  for (int j = 0; j < m; ++j) {
    const std::vector<int> a = active_at(vertices[j]);
    const std::vector<int> b = active_at(vertices[(j + 1) % m]);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (common.size() != 1) {
      throw invariant_violation("polygon edge without a unique support line");
    }
    edge_con[j] = common[0];
  }

  auto edge_rep = [&](int j) {
    const PolyConstraint& pc = cons[edge_con[j]];
    if (pc.row < 0) return pc.grad;  // inward box normal
    return vec2(Rational(sv_cell[pc.row]) * rows2[pc.row].normal[0],
                Rational(sv_cell[pc.row]) * rows2[pc.row].normal[1]);
  };

  auto corner_rep = [&](const RVec& v) {
    LinearSystem sys(2);
    for (int r : active_at(v)) {
      if (cons[r].row < 0) {
        sys.add(cons[r].grad, Rational(0), Rel::gt);
      } else {
        RVec g = vec2(Rational(sv_cell[cons[r].row]) * rows2[cons[r].row].normal[0],
                      Rational(sv_cell[cons[r].row]) * rows2[cons[r].row].normal[1]);
        sys.add(g, Rational(0), Rel::gt);
      }
    }
    auto u = sys.sample(options.witness_variant);
    if (!u) {
      throw invariant_violation("empty direction cone at a polygon corner");
    }
    return *u;
  };

  // Cyclic sequence of field representatives: edge, corner, edge, corner, ...
  std::vector<RVec> reps;
  reps.reserve(2 * m);
  for (int j = 0; j < m; ++j) {
    reps.push_back(edge_rep(j));
    reps.push_back(corner_rep(vertices[(j + 1) % m]));
  }

  // Reference ray (t, 1) not collinear with any representative.
  RVec ray = vec2(Rational(0), Rational(1));
  for (long long t = 0;; ++t) {
    ray = vec2(Rational(t), Rational(1));
    bool ok = true;
    for (const RVec& u : reps) {
      if (cross2(u, ray).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }

  // Winding number by signed crossings of the ray; every consecutive pair
  // shares an open half-plane, so each step is the short arc.
  int winding = 0;
  const int s = static_cast<int>(reps.size());
  for (int j = 0; j < s; ++j) {
    const RVec& u = reps[j];
    const RVec& w = reps[(j + 1) % s];
    const int turn = cross2(u, w).sign();
    if (turn == 0) {
      if (dot2(u, w).sign() <= 0) {
        throw invariant_violation("antipodal directing representatives");
      }
      continue;
    }
    if (turn > 0) {
      if (cross2(u, ray).sign() > 0 && cross2(ray, w).sign() > 0) ++winding;
    } else {
      if (cross2(u, ray).sign() < 0 && cross2(ray, w).sign() < 0) --winding;
    }
  }
  if (trace != nullptr) {
    trace->reps = reps;
    trace->winding = winding;
  }
  return winding;
}

}  // namespace

int cell_degree(const Arrangement& section, int k, const SignVector& sv_cell,
                const SignVector& sv_target, const DegreeOptions& options,
                Level3Trace* trace) {
  if (static_cast<int>(sv_cell.size()) != section.size() ||
      static_cast<int>(sv_target.size()) != section.size()) {
    throw input_error("sign vector length does not match the section");
  }
  if (options.clip_scale < Rational(1)) {
    throw input_error("clip scale must be at least 1");
  }
  switch (k) {
    case 1:
      return -1;
    case 2:
      return degree_level2(section, sv_cell, sv_target, options);
    case 3:
      return degree_level3(section, sv_cell, sv_target, options, trace);
    default:
      throw unsupported_dimension(
          "boundary degrees are implemented for levels 1 to 3");
  }
}

}  // namespace arrhom
