// unit_cli — end-to-end checks of the arrhom binary (path passed as argv[1]).
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "support.hpp"

namespace {

using testkit::Gate;

std::string g_cli;
std::filesystem::path g_dir;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw testkit::GateFailure{"popen failed: " + cmd};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  RunResult r;
  r.out = std::move(out);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_input(const std::string& name, const std::string& text) {
  const std::filesystem::path path = g_dir / name;
  std::ofstream out(path);
  out << text;
  out.close();
  return path.string();
}

void check_contains(const RunResult& r, const std::string& needle,
                    const std::string& what) {
  if (r.out.find(needle) != std::string::npos) return;
  throw testkit::GateFailure{what + ": missing \"" + needle +
                             "\" in output:\n" + r.out};
}

std::string triangle_input() {
  static const std::string path = write_input(
      "triangle.json",
      R"({"dim": 2,
          "hyperplanes": [[17, -28, -1190], [4, 1, -800], [2, 3, -700]],
          "flag": {"base": [140, 20], "basis": [[1, 0], [0, 1]]}})");
  return path;
}

std::string bare_triangle_input() {  // no flag, no weights
  static const std::string path = write_input(
      "triangle_bare.json",
      R"({"dim": 2,
          "hyperplanes": [[17, -28, -1190], [4, 1, -800], [2, 3, -700]]})");
  return path;
}

std::string cross_input() {  // rational string coefficients and weights
  static const std::string path = write_input(
      "cross.json",
      R"({"dim": 2,
          "hyperplanes": [[-1, 1, "-1/2"], [1, 1, "-1/2"]],
          "flag": {"base": [0, 0], "basis": [[1, 0], [0, 1]]},
          "weights": [2, "1/3"]})");
  return path;
}

void gate_lattice_and_chambers() {
  const std::string in = triangle_input();
  RunResult r = run_cli("--input " + in + " --command lattice");
  CHECK_EQ(r.exit_code, 0, "lattice exits 0");
  check_contains(r, "poincare = 1 + 3*t + 3*t^2", "lattice");
  check_contains(r, "beta = 1", "lattice");
  check_contains(r, "essential = true", "lattice");

  r = run_cli("--input " + in + " --command chambers");
  CHECK_EQ(r.exit_code, 0, "chambers exits 0");
  check_contains(r, "chambers = 7", "chambers");
  check_contains(r, "bounded = 1", "chambers");
  check_contains(r, "sv -+- (bounded)", "chambers");
}

void gate_partition() {
  RunResult r =
      run_cli("--input " + triangle_input() + " --command partition");
  CHECK_EQ(r.exit_code, 0, "partition exits 0");
  check_contains(r, "flag: input", "partition");
  check_contains(r, "ch0: 1, ch1: 3, ch2: 3", "partition");
  check_contains(r, "ch0 chambers: +--", "partition");
  check_contains(r, "ch1 chambers: --- ++- +++", "partition");
  check_contains(r, "ch2 chambers: --+ -+- -++", "partition");
}

void gate_seeded_and_file_flags() {
  const std::string bare = bare_triangle_input();
  RunResult r =
      run_cli("--input " + bare + " --command partition --flag-seed 3");
  CHECK_EQ(r.exit_code, 0, "seeded partition exits 0");
  check_contains(r, "flag: seed 3", "seeded partition");
  check_contains(r, "ch0: 1, ch1: 3, ch2: 3", "seeded partition");

  r = run_cli("--input " + bare + " --command partition");
  CHECK_EQ(r.exit_code, 0, "default seed exits 0");
  check_contains(r, "flag: seed 0", "default flag report");

  const std::string flag_file = write_input(
      "flag.json", R"({"base": [140, 20], "basis": [[1, 0], [0, 1]]})");
  r = run_cli("--input " + bare + " --command partition --flag-file " +
              flag_file);
  CHECK_EQ(r.exit_code, 0, "flag file exits 0");
  check_contains(r, "flag: file", "flag file report");
  check_contains(r, "ch2 chambers: --+ -+- -++", "flag file partition");
}

void gate_salvetti_and_degrees() {
  RunResult r = run_cli("--input " + triangle_input() + " --command salvetti");
  CHECK_EQ(r.exit_code, 0, "salvetti exits 0");
  check_contains(r, "cells: 7 18 12", "salvetti");
  check_contains(r, "euler = 1", "salvetti");

  r = run_cli("--input " + triangle_input() + " --command degrees");
  CHECK_EQ(r.exit_code, 0, "degrees exits 0");
  check_contains(r, "deg(---, +--) = -1", "degrees level 1");
  check_contains(r, "deg(-+-, ---) = -1", "degrees level 2");
  check_contains(r, "deg(-+-, +++) = 0", "degrees level 2 zero");
  check_contains(r, "deg(--+, ++-) = 1", "degrees level 2 positive");
}

void gate_complex() {
  RunResult r = run_cli("--input " + triangle_input() + " --command complex");
  CHECK_EQ(r.exit_code, 0, "complex exits 0");
  check_contains(r, "basis 1: --- ++- +++", "complex basis");
  check_contains(r, "d1[---] = (-q1 + q1^-1)*[+--]", "d1 entry");
  check_contains(r, "d1[+++] = (q2*q3 - q2^-1*q3^-1)*[+--]", "d1 entry");
  check_contains(r, "d2[-+-] = (q2 - q2^-1)*[---] + (q1 - q1^-1)*[++-]",
                 "d2 column");
  check_contains(
      r,
      "d2[--+] = (q3 - q3^-1)*[---] + (-q1*q2*q3 + q1^-1*q2^-1*q3^-1)*[++-]"
      " + (q1*q2 - q1^-1*q2^-1)*[+++]",
      "d2 column with triple separator");
}

void gate_homology() {
  const std::string in = triangle_input();
  RunResult r = run_cli("--input " + in + " --command homology --q 1,1,1");
  CHECK_EQ(r.exit_code, 0, "homology exits 0");
  check_contains(r, "q = (1, 1, 1)", "homology q echo");
  check_contains(r, "h = (1, 3, 3)", "trivial weights");

  r = run_cli("--input " + in + " --command homology --q 2,3,5");
  check_contains(r, "h = (0, 0, 1)", "generic weights");

  // Weights taken from the input document, rational strings included. Two
  // crossing lines have beta = 0, so generic homology vanishes everywhere.
  r = run_cli("--input " + cross_input() + " --command homology");
  CHECK_EQ(r.exit_code, 0, "input weights exit 0");
  check_contains(r, "q = (2, 1/3)", "input weights echo");
  check_contains(r, "h = (0, 0, 0)", "cross generic homology");
}

void gate_resonance_scan() {
  RunResult r = run_cli("--input " + triangle_input() +
                        " --command resonance-scan --q-grid \"1,1,1;2,3,5;1,-1,1\"");
  CHECK_EQ(r.exit_code, 0, "scan exits 0");
  check_contains(r, "q = (1, 1, 1): resonant = true", "scan line 1");
  check_contains(r, "q = (2, 3, 5): resonant = false", "scan line 2");
  check_contains(r, "q = (1, -1, 1): resonant = true", "scan line 3");
  check_contains(r, "resonant points: 2 of 3", "scan summary");
}

void gate_pi1() {
  RunResult r = run_cli("--input " + triangle_input() + " --command pi1");
  CHECK_EQ(r.exit_code, 0, "pi1 exits 0");
  check_contains(r, "generators: gamma1, gamma2, gamma3", "pi1 generators");
  check_contains(r, "gamma1^-1*gamma2^-1*gamma1*gamma2", "pi1 relator");
  check_contains(r, "gamma1^-1*gamma3^-1*gamma1*gamma3", "pi1 relator");
  check_contains(r, "gamma1^-1*gamma2*gamma3^-1*gamma1*gamma2^-1*gamma3",
                 "pi1 relator");
  check_contains(r, "abelianization: Z^3", "pi1 abelianization");
}

void gate_structured_format() {
  const std::string in = triangle_input();
  RunResult r = run_cli("--input " + in +
                        " --command partition --format structured");
  CHECK_EQ(r.exit_code, 0, "structured partition exits 0");
  check_contains(r, "flag.source=input", "structured flag");
  check_contains(r, "partition.0.chambers=+--", "structured level 0");
  check_contains(r, "partition.2.chambers=--+,-+-,-++", "structured level 2");

  r = run_cli("--input " + in +
              " --command homology --q 2,3,5 --format structured");
  check_contains(r, "q=2,3,5", "structured q");
  check_contains(r, "homology.0=0", "structured h0");
  check_contains(r, "homology.2=1", "structured h2");

  r = run_cli("--input " + in + " --command lattice --format structured");
  check_contains(r, "poincare.0=1", "structured poincare");
  check_contains(r, "beta=1", "structured beta");

  r = run_cli("--input " + in +
              " --command resonance-scan --q-grid \"2,3,5\" --format structured");
  check_contains(r, "scan.0.resonant=0", "structured scan");
  check_contains(r, "scan.resonant_count=0", "structured scan count");
}

void gate_determinism() {
  const std::string args =
      "--input " + triangle_input() + " --command complex";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK_EQ(a.exit_code, 0, "first run exits 0");
  CHECK(a.out == b.out, "identical runs produce identical output");
}

void gate_error_exits() {
  const std::string in = triangle_input();

  RunResult r = run_cli("--input /nonexistent.json --command lattice");
  CHECK_EQ(r.exit_code, 1, "missing file exits 1");

  const std::string bad = write_input("bad.json", "{oops");
  r = run_cli("--input " + bad + " --command lattice");
  CHECK_EQ(r.exit_code, 1, "malformed JSON exits 1");

  r = run_cli("--input " + in + " --command homology --q 1,1");
  CHECK_EQ(r.exit_code, 1, "wrong weight count exits 1");

  r = run_cli("--input " + in + " --command homology --q 1,0,1");
  CHECK_EQ(r.exit_code, 1, "zero weight exits 1");

  r = run_cli("--input " + in + " --command homology");
  CHECK_EQ(r.exit_code, 1, "missing weights exit 1");

  r = run_cli("--input " + in + " --command frobnicate");
  CHECK_EQ(r.exit_code, 1, "unknown command exits 1");

  r = run_cli("--input " + in + " --command lattice --format yaml");
  CHECK_EQ(r.exit_code, 1, "unknown format exits 1");

  const std::string degenerate = write_input(
      "degenerate_flag.json",
      R"({"dim": 2,
          "hyperplanes": [[17, -28, -1190], [4, 1, -800], [2, 3, -700]],
          "flag": {"base": ["1750/17", 20], "basis": [[1, 0], [0, 1]]}})");
  r = run_cli("--input " + degenerate + " --command partition");
  CHECK_EQ(r.exit_code, 1, "non-generic flag exits 1");
  check_contains(r, "not generic", "non-generic flag message");

  const std::string dim4 = write_input(
      "dim4.json",
      R"({"dim": 4, "hyperplanes": [[1, 0, 0, 0, 0], [0, 1, 0, 0, -1]]})");
  r = run_cli("--input " + dim4 + " --command homology --q 1,1");
  CHECK_EQ(r.exit_code, 1, "unsupported dimension exits 1");
  // Dimension-agnostic commands still work in dimension 4.
  r = run_cli("--input " + dim4 + " --command lattice");
  CHECK_EQ(r.exit_code, 0, "lattice works in dimension 4");
  check_contains(r, "poincare = 1 + 2*t + t^2", "dim-4 poincare");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: unit_cli <path-to-arrhom-binary>\n");
    return 1;
  }
  g_cli = argv[1];
  g_dir = std::filesystem::temp_directory_path() /
          ("arrhom_cli_test_" + std::to_string(getpid()));
  std::filesystem::create_directories(g_dir);

  return testkit::run_gates({
      {"lattice and chambers", gate_lattice_and_chambers},
      {"partition text golden", gate_partition},
      {"seeded and file flags", gate_seeded_and_file_flags},
      {"salvetti and degrees", gate_salvetti_and_degrees},
      {"complex goldens", gate_complex},
      {"homology goldens", gate_homology},
      {"resonance scan", gate_resonance_scan},
      {"pi1 presentation", gate_pi1},
      {"structured format", gate_structured_format},
      {"determinism", gate_determinism},
      {"error exits", gate_error_exits},
  });
}
