// unit_degree — boundary degrees: pinned tables, stability, exact winding.
#include <cmath>
#include <string>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/chambers.hpp"
#include "arrhom/degree.hpp"
#include "arrhom/errors.hpp"
#include "arrhom/flag.hpp"
#include "arrhom/lattice.hpp"

#include "fixtures.hpp"
#include "support.hpp"

namespace {

using namespace arrhom;
using testkit::Gate;
using testkit::throws;

struct Setup {
  Arrangement arr;
  OrientedFlag flag;
  std::vector<Chamber> chambers;
  ChamberLevels levels;
};

Setup make(const Arrangement& arr, const OrientedFlag& flag) {
  Setup s{arr, flag, enumerate_chambers(arr), {}};
  s.levels = partition_chambers(s.arr, s.flag, s.chambers);
  return s;
}

Setup make_seeded(const Arrangement& arr, unsigned seed) {
  const IntersectionLattice lat = IntersectionLattice::build(arr);
  return make(arr, build_flag(arr, lat, seed));
}

int deg_of(const Setup& s, int k, int cell, int target,
           const DegreeOptions& opts = {}, Level3Trace* trace = nullptr) {
  const Arrangement section = flag_section(s.arr, s.flag, k);
  return cell_degree(section, k, s.chambers[cell].sv, s.chambers[target].sv,
                     opts, trace);
}

// Signed angle sum of the cyclic representative sequence, in doubles, with
// `refine`-fold interpolation inside each step. The winding number is exact;
// this checks that the float shadow agrees to high precision.
double float_residue(const Level3Trace& trace, int refine) {
  std::vector<std::pair<double, double>> dirs;
  const size_t m = trace.reps.size();
  for (size_t j = 0; j < m; ++j) {
    const RVec& u = trace.reps[j];
    const RVec& w = trace.reps[(j + 1) % m];
    const double ux = u[0].to_double(), uy = u[1].to_double();
    const double wx = w[0].to_double(), wy = w[1].to_double();
    const double un = std::hypot(ux, uy), wn = std::hypot(wx, wy);
    for (int t = 0; t < refine; ++t) {
      const double a = static_cast<double>(t) / refine;
      dirs.emplace_back((1 - a) * ux / un + a * wx / wn,
                        (1 - a) * uy / un + a * wy / wn);
    }
  }
  double total = 0;
  for (size_t j = 0; j < dirs.size(); ++j) {
    const auto& [ax, ay] = dirs[j];
    const auto& [bx, by] = dirs[(j + 1) % dirs.size()];
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  return total / (2 * M_PI) - trace.winding;
}

void gate_level1() {
  const Setup s = make(fixtures::triangle(), fixtures::triangle_flag());
  const int base = s.levels.by_level[0][0];
  for (int cell : s.levels.by_level[1]) {
    CHECK_EQ(deg_of(s, 1, cell, base), -1, "level-1 degree is -1");
  }
}

void gate_triangle_table() {
  const Setup s = make(fixtures::triangle(), fixtures::triangle_flag());
  auto index_of = [&](const char* sv) {
    for (size_t i = 0; i < s.chambers.size(); ++i) {
      if (sv_to_string(s.chambers[i].sv) == sv) return static_cast<int>(i);
    }
    throw testkit::GateFailure{std::string("chamber not found: ") + sv};
  };
  const int c1 = index_of("---"), c2 = index_of("++-"), c3 = index_of("+++");
  const int c4 = index_of("-+-"), c5 = index_of("-++"), c6 = index_of("--+");
  const int want[3][3] = {{-1, -1, 0},   // central triangle
                          {-1, 0, -1},   // upper wedge
                          {-1, 1, -1}};  // lower wedge
  const int cells[3] = {c4, c5, c6};
  const int targets[3] = {c1, c2, c3};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK_EQ(deg_of(s, 2, cells[a], targets[b]), want[a][b],
               "pinned degree entry");
    }
  }
}

void gate_cross_table() {
  const Setup s = make(fixtures::cross(), fixtures::cross_flag());
  CHECK(s.levels.by_level[2].size() == 1 && s.levels.by_level[1].size() == 2,
        "cross level sizes");
  const int cell = s.levels.by_level[2][0];
  for (int target : s.levels.by_level[1]) {
    CHECK_EQ(deg_of(s, 2, cell, target), -1, "both exponents are -1");
  }
}

void check_stability(const Setup& s, const char* name) {
  DegreeOptions wide;
  wide.clip_scale = Rational(2);
  DegreeOptions alt;
  alt.witness_variant = 1;
  DegreeOptions both;
  both.clip_scale = Rational(3);
  both.witness_variant = 1;
  for (size_t k = 1; k < s.levels.by_level.size(); ++k) {
    if (s.levels.by_level[k].empty() || s.levels.by_level[k - 1].empty()) {
      continue;
    }
    for (int cell : s.levels.by_level[k]) {
      for (int target : s.levels.by_level[k - 1]) {
        const int base = deg_of(s, static_cast<int>(k), cell, target);
        for (const DegreeOptions& o : {wide, alt, both}) {
          CHECK_EQ(deg_of(s, static_cast<int>(k), cell, target, o), base,
                   std::string(name) + ": degree varies with options");
        }
      }
    }
  }
}

void gate_stability_dim2() {
  check_stability(make(fixtures::triangle(), fixtures::triangle_flag()),
                  "triangle");
  check_stability(make(fixtures::skew_triangle(), fixtures::skew_flag()),
                  "skew_triangle");
  check_stability(make(fixtures::cross(), fixtures::cross_flag()), "cross");
  check_stability(make(fixtures::pencil3(), fixtures::pencil3_flag()),
                  "pencil3");
}

void gate_stability_dim3() {
  check_stability(make_seeded(fixtures::boolean3(), 0), "boolean3");
  check_stability(make_seeded(fixtures::generic4(), 0), "generic4");
}

void gate_winding_residue() {
  for (const Arrangement& arr : {fixtures::boolean3(), fixtures::generic4()}) {
    const Setup s = make_seeded(arr, 0);
    CHECK(!s.levels.by_level[3].empty(), "level-3 cells exist");
    for (int cell : s.levels.by_level[3]) {
      for (int target : s.levels.by_level[2]) {
        Level3Trace trace;
        const int deg = deg_of(s, 3, cell, target, {}, &trace);
        CHECK_EQ(trace.winding, deg, "trace records the winding");
        CHECK(!trace.reps.empty(), "trace has representatives");
        const double r1 = float_residue(trace, 1);
        const double r4 = float_residue(trace, 4);
        CHECK(std::abs(r1) < 1e-6, "float residue at base sampling");
        CHECK(std::abs(r4) < 1e-6, "float residue at 4x refinement");
      }
    }
  }
}

void gate_second_flag() {
  // A rebased, rescaled flag keeping the same crossing combinatorics must
  // give the identical partition and degree table.
  const Setup a = make(fixtures::triangle(), fixtures::triangle_flag());
  const Setup b = make(fixtures::triangle(),
                       fixtures::make_flag({141, 21}, {{2, 0}, {0, 3}}));
  CHECK(a.levels.by_level == b.levels.by_level, "partitions agree");
  for (size_t k = 1; k < a.levels.by_level.size(); ++k) {
    for (int cell : a.levels.by_level[k]) {
      for (int target : a.levels.by_level[k - 1]) {
        CHECK_EQ(deg_of(b, static_cast<int>(k), cell, target),
                 deg_of(a, static_cast<int>(k), cell, target),
                 "degrees agree across comparable flags");
      }
    }
  }
}

void gate_error_contracts() {
  const Setup s = make(fixtures::triangle(), fixtures::triangle_flag());
  const Arrangement section = flag_section(s.arr, s.flag, 2);
  const SignVector cell = s.chambers[s.levels.by_level[2][0]].sv;
  const SignVector target = s.chambers[s.levels.by_level[1][0]].sv;
  CHECK(throws<unsupported_dimension>(
            [&] { cell_degree(section, 4, cell, target); }),
        "level above 3 unsupported");
  CHECK(throws<input_error>(
            [&] { cell_degree(section, 2, sv_from_string("+-"), target); }),
        "sign vector length checked");
  DegreeOptions bad;
  bad.clip_scale = Rational(1, 2);
  CHECK(throws<input_error>(
            [&] { cell_degree(section, 2, cell, target, bad); }),
        "clip scale below 1 rejected");
}

}  // namespace

int main() {
  return testkit::run_gates({
      {"level-1 degrees", gate_level1},
      {"pinned triangle table", gate_triangle_table},
      {"cross exponents", gate_cross_table},
      {"stability under options (dim 2)", gate_stability_dim2},
      {"stability under options (dim 3)", gate_stability_dim3},
      {"exact winding vs float shadow", gate_winding_residue},
      {"second comparable flag", gate_second_flag},
      {"error contracts", gate_error_contracts},
  });
}
