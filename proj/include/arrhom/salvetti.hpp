// salvetti.hpp — the Salvetti complex of a real arrangement.
//
// Cells are pairs (F, C) of a face and a chamber whose closure contains it;
// the dimension of the cell is the codimension of F. The face relation is
// (F1, C1) <= (F2, C2) iff F2 <= F1 in the face order and the chamber of the
// smaller cell is the one seen from F1 looking toward C2, i.e. F1 o C2 = C1.
#pragma once

#include <cstdint>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/chambers.hpp"

namespace arrhom {

struct SalvettiCell {
  int face = 0;     // index into the face list
  int chamber = 0;  // index into the chamber list
  int dim = 0;      // codimension of the face
};

// All cells, sorted by (dim, face, chamber).
std::vector<SalvettiCell> salvetti_cells(const std::vector<Face>& faces,
                                         const std::vector<Chamber>& chambers);

bool salvetti_leq(const SalvettiCell& a, const SalvettiCell& b,
                  const std::vector<Face>& faces,
                  const std::vector<Chamber>& chambers);

std::vector<int> salvetti_counts(const std::vector<SalvettiCell>& cells);

long long euler_characteristic(const std::vector<int>& counts);

}  // namespace arrhom
