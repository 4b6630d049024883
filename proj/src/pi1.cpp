#include "arrhom/pi1.hpp"

#include <algorithm>

#include "arrhom/degree.hpp"
#include "arrhom/errors.hpp"

namespace arrhom {

namespace {

void push_merged(GroupWord& w, int gen, int exp) {
  if (exp == 0) return;
  if (!w.empty() && w.back().first == gen) {
    w.back().second += exp;
    if (w.back().second == 0) w.pop_back();
    return;
  }
  w.push_back({gen, exp});
}

// Smith normal form diagonal of an integer matrix (destructive).
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  std::vector<Int> diag;
  size_t row = 0, col = 0;
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  while (row < rows && col < cols) {
    // Find the entry of least absolute value in the remaining block.
    size_t pr = row, pc = col;
    bool found = false;
    Int best = 0;
    for (size_t i = row; i < rows; ++i) {
      for (size_t j = col; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = m[i][j] < 0 ? Int(-m[i][j]) : m[i][j];
        if (!found || a < best) {
          best = a;
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    if (!found) break;
    std::swap(m[row], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][col], m[i][pc]);

    bool clean = true;
    for (size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] != 0) {
        Int f = m[i][col] / m[row][col];
        for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        if (m[i][col] != 0) clean = false;
      }
    }
    for (size_t j = col + 1; j < cols; ++j) {
      if (m[row][j] != 0) {
        Int f = m[row][j] / m[row][col];
        for (size_t i = row; i < rows; ++i) m[i][j] -= f * m[i][col];
        if (m[row][j] != 0) clean = false;
      }
    }
    if (!clean) continue;  // smaller remainders appeared; pick a new pivot

    Int d = m[row][col] < 0 ? Int(-m[row][col]) : m[row][col];
    diag.push_back(d);
    ++row;
    ++col;
  }
  // Enforce the divisibility chain d_1 | d_2 | ... with gcd/lcm fixups.
  for (size_t i = 0; i + 1 < diag.size(); ++i) {
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        Int g = boost::multiprecision::gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  return diag;
}

}  // namespace

std::string word_str(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& [gen, exp] : w) {
    if (!out.empty()) out += '*';
    out += "gamma" + std::to_string(gen);
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

Presentation fundamental_group(const Arrangement& arr,
                               const IntersectionLattice& lat,
                               const OrientedFlag& flag,
                               const std::vector<Chamber>& chambers) {
  if (arr.dim() != 2) {
    throw unsupported_dimension(
        "fundamental group presentations need ambient dimension 2");
  }
  if (!flag_is_generic(arr, lat, flag)) {
    throw input_error("flag is not generic for this arrangement");
  }

  ChamberLevels levels = partition_chambers(arr, flag, chambers);
  const Arrangement section = flag_section(arr, flag, 2);

  Presentation pres;
  pres.generator_chambers = levels.by_level[1];
  pres.generators = static_cast<int>(pres.generator_chambers.size());

  for (int ci : levels.by_level[2]) {
    const Chamber& cell = chambers[ci];
    std::vector<int> e(pres.generators, 0);
    for (int g = 0; g < pres.generators; ++g) {
      e[g] = cell_degree(section, 2, cell.sv,
                         chambers[pres.generator_chambers[g]].sv);
    }
    GroupWord w;
    for (int g = 0; g < pres.generators; ++g) push_merged(w, g + 1, e[g]);
    for (int g = 0; g < pres.generators; ++g) push_merged(w, g + 1, -e[g]);
    if (!w.empty()) pres.relators.push_back(std::move(w));
  }
  return pres;
}

Abelianization abelianize(const Presentation& pres) {
  std::vector<std::vector<Int>> m(pres.relators.size(),
                                  std::vector<Int>(pres.generators, Int(0)));
  for (size_t r = 0; r < pres.relators.size(); ++r) {
    for (const auto& [gen, exp] : pres.relators[r]) {
      m[r][gen - 1] += exp;
    }
  }
  std::vector<Int> diag = smith_diagonal(std::move(m));

  Abelianization ab;
  int nonzero = 0;
  for (const Int& d : diag) {
    if (d != 0) {
      ++nonzero;
      if (d > 1) ab.torsion.push_back(d);
    }
  }
  std::sort(ab.torsion.begin(), ab.torsion.end());
  ab.free_rank = pres.generators - nonzero;
  return ab;
}

}  // namespace arrhom
