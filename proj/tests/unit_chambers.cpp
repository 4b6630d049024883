// unit_chambers — chamber/face enumeration and relative boundedness.
#include <set>
#include <string>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/chambers.hpp"
#include "arrhom/lattice.hpp"

#include "fixtures.hpp"
#include "support.hpp"

namespace {

using namespace arrhom;
using testkit::Gate;

Int poincare_at(const IntersectionLattice& lat, int t) {
  Int value = 0;
  Int power = 1;
  for (const Int& c : lat.poincare()) {
    value += c * power;
    power *= t;
  }
  return value;
}

void check_counts(const Arrangement& arr, const char* name) {
  const IntersectionLattice lat = IntersectionLattice::build(arr);
  const std::vector<Chamber> chambers = enumerate_chambers(arr);
  CHECK(Int(static_cast<long long>(chambers.size())) == poincare_at(lat, 1),
        std::string(name) + ": chamber count vs poincare(1)");
  Int bounded = 0;
  for (const Chamber& c : chambers) {
    if (chamber_bounded(arr, c.sv)) ++bounded;
  }
  CHECK(bounded == lat.beta(),
        std::string(name) + ": relatively bounded count vs beta");
  for (const Chamber& c : chambers) {
    CHECK(sv_to_string(arr.sign_vector_at(c.sample)) == sv_to_string(c.sv),
          std::string(name) + ": sample point lies in its chamber");
  }
  for (size_t i = 1; i < chambers.size(); ++i) {
    CHECK(sv_lex_less(chambers[i - 1].sv, chambers[i].sv),
          std::string(name) + ": chambers sorted and distinct");
  }
}

void gate_triangle_chambers() {
  const std::vector<Chamber> chambers = enumerate_chambers(fixtures::triangle());
  std::vector<std::string> got;
  for (const Chamber& c : chambers) got.push_back(sv_to_string(c.sv));
  const std::vector<std::string> want = {"---", "--+", "-+-", "-++",
                                         "+--", "++-", "+++"};
  CHECK(got == want, "triangle chamber sign vectors");
  int bounded = 0;
  std::string bounded_sv;
  for (const Chamber& c : chambers) {
    if (chamber_bounded(fixtures::triangle(), c.sv)) {
      ++bounded;
      bounded_sv = sv_to_string(c.sv);
    }
  }
  CHECK_EQ(bounded, 1, "one bounded chamber");
  CHECK(bounded_sv == "-+-", "the central triangle is the bounded chamber");
}

void gate_fixture_counts() {
  check_counts(fixtures::triangle(), "triangle");
  check_counts(fixtures::skew_triangle(), "skew_triangle");
  check_counts(fixtures::cross(), "cross");
  check_counts(fixtures::pencil3(), "pencil3");
  check_counts(fixtures::single_line(), "single_line");
  check_counts(fixtures::parallel_pair(), "parallel_pair");
  check_counts(fixtures::boolean3(), "boolean3");
  check_counts(fixtures::generic4(), "generic4");
}

void gate_random_counts() {
  for (uint64_t seed = 100; seed < 118; ++seed) {
    const int dim = 1 + static_cast<int>(seed % 3);
    const int n = 2 + static_cast<int>(seed % 7);
    check_counts(fixtures::random_arrangement(seed, dim, n), "random");
  }
}

void gate_relative_boundedness() {
  // The strip between two parallel lines is relatively bounded but not
  // bounded; the outer half-planes are neither.
  const Arrangement par = fixtures::parallel_pair();
  CHECK(chamber_bounded(par, sv_from_string("+-")), "strip relatively bounded");
  CHECK(!chamber_bounded(par, sv_from_string("--")), "left half-plane");
  CHECK(!chamber_bounded(par, sv_from_string("++")), "right half-plane");
}

void gate_triangle_faces() {
  const Arrangement arr = fixtures::triangle();
  const IntersectionLattice lat = IntersectionLattice::build(arr);
  const std::vector<Face> faces = enumerate_faces(arr, lat);
  int by_codim[3] = {0, 0, 0};
  for (const Face& f : faces) {
    ++by_codim[f.codim];
    CHECK(f.codim == lat.flat(f.flat).rank, "codim matches flat rank");
    CHECK(sv_zero_mask(f.sv) == lat.flat(f.flat).contains,
          "zeros exactly on the flat");
    CHECK(sv_to_string(arr.sign_vector_at(f.sample)) == sv_to_string(f.sv),
          "face sample realizes its sign vector");
  }
  CHECK(by_codim[0] == 7 && by_codim[1] == 9 && by_codim[2] == 3,
        "triangle face profile 7/9/3");
  // Faces arrive grouped by flat, flats in lattice order.
  for (size_t i = 1; i < faces.size(); ++i) {
    CHECK(faces[i - 1].flat <= faces[i].flat, "faces grouped by flat");
  }
  std::set<std::string> distinct;
  for (const Face& f : faces) distinct.insert(sv_to_string(f.sv));
  CHECK_EQ(distinct.size(), faces.size(), "face sign vectors distinct");
}

void gate_face_profiles() {
  {
    const Arrangement arr = fixtures::cross();
    const std::vector<Face> faces =
        enumerate_faces(arr, IntersectionLattice::build(arr));
    int by_codim[3] = {0, 0, 0};
    for (const Face& f : faces) ++by_codim[f.codim];
    CHECK(by_codim[0] == 4 && by_codim[1] == 4 && by_codim[2] == 1,
          "cross face profile 4/4/1");
  }
  {
    const Arrangement arr = fixtures::boolean3();
    const std::vector<Face> faces =
        enumerate_faces(arr, IntersectionLattice::build(arr));
    CHECK_EQ(faces.size(), static_cast<size_t>(27),
             "boolean faces = all sign patterns");
  }
  {
    const Arrangement arr = fixtures::pencil3();
    const std::vector<Face> faces =
        enumerate_faces(arr, IntersectionLattice::build(arr));
    // 6 chambers, 6 rays, 1 center.
    int by_codim[3] = {0, 0, 0};
    for (const Face& f : faces) ++by_codim[f.codim];
    CHECK(by_codim[0] == 6 && by_codim[1] == 6 && by_codim[2] == 1,
          "pencil face profile 6/6/1");
  }
}

}  // namespace

int main() {
  return testkit::run_gates({
      {"triangle chambers", gate_triangle_chambers},
      {"fixture counts vs lattice", gate_fixture_counts},
      {"random counts vs lattice", gate_random_counts},
      {"relative boundedness of strips", gate_relative_boundedness},
      {"triangle faces", gate_triangle_faces},
      {"face profiles", gate_face_profiles},
  });
}
