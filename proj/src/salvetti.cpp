#include "arrhom/salvetti.hpp"

#include <algorithm>

namespace arrhom {

std::vector<SalvettiCell> salvetti_cells(
    const std::vector<Face>& faces, const std::vector<Chamber>& chambers) {
  std::vector<SalvettiCell> cells;
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    for (int ci = 0; ci < static_cast<int>(chambers.size()); ++ci) {
      if (sv_face_leq(faces[fi].sv, chambers[ci].sv)) {
        cells.push_back({fi, ci, faces[fi].codim});
      }
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const SalvettiCell& a, const SalvettiCell& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              if (a.face != b.face) return a.face < b.face;
              return a.chamber < b.chamber;
            });
  return cells;
}

bool salvetti_leq(const SalvettiCell& a, const SalvettiCell& b,
                  const std::vector<Face>& faces,
                  const std::vector<Chamber>& chambers) {
  const SignVector& fa = faces[a.face].sv;
  const SignVector& fb = faces[b.face].sv;
  if (!sv_face_leq(fb, fa)) return false;
  return sv_compose(fa, chambers[b.chamber].sv) == chambers[a.chamber].sv;
}

std::vector<int> salvetti_counts(const std::vector<SalvettiCell>& cells) {
  int top = 0;
  for (const SalvettiCell& c : cells) top = std::max(top, c.dim);
  std::vector<int> counts(top + 1, 0);
  for (const SalvettiCell& c : cells) ++counts[c.dim];
  return counts;
}

long long euler_characteristic(const std::vector<int>& counts) {
  long long chi = 0;
  long long sign = 1;
  for (int c : counts) {
    chi += sign * c;
    sign = -sign;
  }
  return chi;
}

}  // namespace arrhom
