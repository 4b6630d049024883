// pi1.hpp — presentation of the fundamental group of a planar arrangement
// complement.
//
// For ambient dimension 2 the level-1 chambers, ordered along +v_1, give one
// generator each. Every level-2 chamber C contributes the relator
//   gamma_1^{e_1} ... gamma_n^{e_n} gamma_1^{-e_1} ... gamma_n^{-e_n}
// with e_i = deg(C, C_i) and vanishing exponents omitted; trivial relators
// are dropped. The abelianization is read off the exponent-sum matrix by its
// Smith normal form.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/chambers.hpp"
#include "arrhom/flag.hpp"
#include "arrhom/lattice.hpp"
#include "arrhom/rational.hpp"

namespace arrhom {

// A word in the generators: (generator index 1..n, nonzero exponent), with
// adjacent equal generators merged.
using GroupWord = std::vector<std::pair<int, int>>;

struct Presentation {
  int generators = 0;
  std::vector<int> generator_chambers;  // chamber index per generator
  std::vector<GroupWord> relators;
};

std::string word_str(const GroupWord& w);  // "gamma1^-1*gamma2*gamma1*gamma2^-1"

Presentation fundamental_group(const Arrangement& arr,
                               const IntersectionLattice& lat,
                               const OrientedFlag& flag,
                               const std::vector<Chamber>& chambers);

struct Abelianization {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

Abelianization abelianize(const Presentation& pres);

}  // namespace arrhom
