// arrhom — command line front end.
//
// arrhom --input FILE --command CMD [--flag-seed N | --flag-file FILE]
//        [--q LIST | --q-grid SPEC] [--format text|structured]
//
// Commands: lattice, chambers, partition, salvetti, degrees, complex,
// homology, resonance-scan, pi1.
//
// Exit codes: 0 success, 1 input error, 2 invariant violation.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrhom/arrangement.hpp"
#include "arrhom/chain.hpp"
#include "arrhom/chambers.hpp"
#include "arrhom/degree.hpp"
#include "arrhom/errors.hpp"
#include "arrhom/flag.hpp"
#include "arrhom/io.hpp"
#include "arrhom/lattice.hpp"
#include "arrhom/pi1.hpp"
#include "arrhom/salvetti.hpp"

namespace {

using namespace arrhom;

struct Options {
  std::string input_path;
  std::string command;
  std::optional<unsigned> flag_seed;
  std::string flag_file;
  std::string q_list;
  std::string q_grid;
  std::string format = "text";
};

bool structured(const Options& opt) { return opt.format == "structured"; }

std::string poly_str(const std::vector<Int>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << coeffs[k].str();
      continue;
    }
    if (coeffs[k] != 1) out << coeffs[k].str() << "*";
    out << "t";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

std::string mask_str(uint64_t mask) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i & 1u) == 0) continue;
    if (!first) out << ", ";
    first = false;
    out << i + 1;
  }
  out << "}";
  return out.str();
}

std::string q_str(const std::vector<Rational>& q) {
  std::ostringstream out;
  for (size_t i = 0; i < q.size(); ++i) {
    if (i > 0) out << ",";
    out << q[i].str();
  }
  return out.str();
}

std::string q_pretty(const std::vector<Rational>& q) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < q.size(); ++i) {
    if (i > 0) out << ", ";
    out << q[i].str();
  }
  out << ")";
  return out.str();
}

// The flag actually used, plus its provenance for the report.
struct ResolvedFlag {
  OrientedFlag flag;
  std::string source;  // "seed", "file", "input"
  unsigned seed = 0;
};

OrientedFlag parse_flag_file(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open flag file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  // Reuse the problem parser: wrap the flag document in a minimal problem if
  // it is a bare {"base","basis"} object.
  std::string text = buffer.str();
  ProblemInput probe = [&] {
    std::ostringstream doc;
    doc << "{\"dim\": " << dim << ", \"hyperplanes\": [[";
    for (int i = 0; i < dim; ++i) doc << (i ? ", " : "") << 1;
    doc << ", 1]], \"flag\": " << text << "}";
    return load_problem_text(doc.str());
  }();
  if (!probe.flag) throw input_error("flag file has no flag");
  return *probe.flag;
}

ResolvedFlag resolve_flag(const Options& opt, const ProblemInput& input,
                          const IntersectionLattice& lat) {
  ResolvedFlag out;
  if (!opt.flag_file.empty()) {
    out.flag = parse_flag_file(opt.flag_file, input.arr.dim());
    out.source = "file";
  } else if (opt.flag_seed) {
    out.flag = build_flag(input.arr, lat, *opt.flag_seed);
    out.source = "seed";
    out.seed = *opt.flag_seed;
  } else if (input.flag) {
    out.flag = *input.flag;
    out.source = "input";
  } else {
    out.flag = build_flag(input.arr, lat, 0);
    out.source = "seed";
    out.seed = 0;
  }
  if (!flag_is_generic(input.arr, lat, out.flag)) {
    throw input_error("flag is not generic for this arrangement");
  }
  return out;
}

void report_flag(const Options& opt, const ResolvedFlag& rf) {
  if (structured(opt)) {
    std::cout << "flag.source=" << rf.source << "\n";
    if (rf.source == "seed") std::cout << "flag.seed=" << rf.seed << "\n";
    std::cout << "flag.base=";
    for (int i = 0; i < rf.flag.base.size(); ++i) {
      std::cout << (i ? "," : "") << rf.flag.base(i).str();
    }
    std::cout << "\n";
    for (int k = 0; k < rf.flag.basis.cols(); ++k) {
      std::cout << "flag.basis." << k + 1 << "=";
      for (int i = 0; i < rf.flag.basis.rows(); ++i) {
        std::cout << (i ? "," : "") << rf.flag.basis(i, k).str();
      }
      std::cout << "\n";
    }
  } else {
    std::cout << "flag: " << rf.source;
    if (rf.source == "seed") std::cout << " " << rf.seed;
    std::cout << "\n";
  }
}

std::vector<Rational> resolve_weights(const Options& opt,
                                      const ProblemInput& input) {
  if (!opt.q_list.empty()) {
    std::vector<Rational> q = parse_weight_list(opt.q_list);
    if (static_cast<int>(q.size()) != input.arr.size()) {
      throw input_error("--q must list one weight per hyperplane");
    }
    return q;
  }
  if (input.weights) return *input.weights;
  throw input_error("this command needs weights (--q or \"weights\" in the input)");
}

// Grid syntax: assignments separated by ';', each a comma list.
std::vector<std::vector<Rational>> parse_grid(const std::string& spec, int n) {
  std::vector<std::vector<Rational>> out;
  std::string item;
  std::stringstream stream(spec);
  while (std::getline(stream, item, ';')) {
    if (item.empty()) continue;
    std::vector<Rational> q = parse_weight_list(item);
    if (static_cast<int>(q.size()) != n) {
      throw input_error("grid assignment must list one weight per hyperplane");
    }
    out.push_back(std::move(q));
  }
  if (out.empty()) throw input_error("empty assignment grid");
  return out;
}

int run_lattice(const Options& opt, const ProblemInput& input) {
  const IntersectionLattice lat = IntersectionLattice::build(input.arr);
  if (structured(opt)) {
    std::cout << "dim=" << lat.dim() << "\n";
    std::cout << "rank=" << lat.rank() << "\n";
    std::cout << "essential=" << (lat.essential() ? 1 : 0) << "\n";
    std::cout << "flat.count=" << lat.size() << "\n";
    for (int i = 0; i < lat.size(); ++i) {
      const Flat& f = lat.flat(i);
      std::cout << "flat." << i << ".rank=" << f.rank << "\n";
      std::cout << "flat." << i << ".hyperplanes=";
      bool first = true;
      for (int h = 0; h < input.arr.size(); ++h) {
        if ((f.contains >> h & 1u) == 0) continue;
        std::cout << (first ? "" : ",") << h + 1;
        first = false;
      }
      std::cout << "\n";
      std::cout << "flat." << i << ".mobius=" << f.mobius.str() << "\n";
    }
    for (size_t k = 0; k < lat.poincare().size(); ++k) {
      std::cout << "poincare." << k << "=" << lat.poincare()[k].str() << "\n";
    }
    std::cout << "beta=" << lat.beta().str() << "\n";
  } else {
    std::cout << "dim = " << lat.dim() << "\n";
    std::cout << "rank = " << lat.rank() << "\n";
    std::cout << "essential = " << (lat.essential() ? "true" : "false") << "\n";
    std::cout << "flats = " << lat.size() << "\n";
    for (int i = 0; i < lat.size(); ++i) {
      const Flat& f = lat.flat(i);
      std::cout << "flat[" << i << "]: rank " << f.rank << ", hyperplanes "
                << mask_str(f.contains) << ", mobius " << f.mobius.str()
                << "\n";
    }
    std::cout << "poincare = " << poly_str(lat.poincare()) << "\n";
    std::cout << "beta = " << lat.beta().str() << "\n";
  }
  return 0;
}

int run_chambers(const Options& opt, const ProblemInput& input) {
  const std::vector<Chamber> chambers = enumerate_chambers(input.arr);
  int bounded = 0;
  std::vector<bool> is_bounded(chambers.size());
  for (size_t i = 0; i < chambers.size(); ++i) {
    is_bounded[i] = chamber_bounded(input.arr, chambers[i].sv);
    if (is_bounded[i]) ++bounded;
  }
  if (structured(opt)) {
    std::cout << "chamber.count=" << chambers.size() << "\n";
    std::cout << "chamber.bounded=" << bounded << "\n";
    for (size_t i = 0; i < chambers.size(); ++i) {
      std::cout << "chamber." << i << ".sv=" << sv_to_string(chambers[i].sv)
                << "\n";
      std::cout << "chamber." << i << ".bounded=" << (is_bounded[i] ? 1 : 0)
                << "\n";
    }
  } else {
    std::cout << "chambers = " << chambers.size() << "\n";
    std::cout << "bounded = " << bounded << "\n";
    for (size_t i = 0; i < chambers.size(); ++i) {
      std::cout << "chamber[" << i << "]: sv " << sv_to_string(chambers[i].sv)
                << (is_bounded[i] ? " (bounded)" : "") << "\n";
    }
  }
  return 0;
}

int run_partition(const Options& opt, const ProblemInput& input) {
  const IntersectionLattice lat = IntersectionLattice::build(input.arr);
  const ResolvedFlag rf = resolve_flag(opt, input, lat);
  const std::vector<Chamber> chambers = enumerate_chambers(input.arr);
  const ChamberLevels levels = partition_chambers(input.arr, rf.flag, chambers);
  report_flag(opt, rf);
  if (structured(opt)) {
    for (size_t k = 0; k < levels.by_level.size(); ++k) {
      std::cout << "partition." << k << ".size=" << levels.by_level[k].size()
                << "\n";
      std::cout << "partition." << k << ".chambers=";
      for (size_t j = 0; j < levels.by_level[k].size(); ++j) {
        std::cout << (j ? "," : "")
                  << sv_to_string(chambers[levels.by_level[k][j]].sv);
      }
      std::cout << "\n";
    }
  } else {
    for (size_t k = 0; k < levels.by_level.size(); ++k) {
      std::cout << (k ? ", " : "") << "ch" << k << ": "
                << levels.by_level[k].size();
    }
    std::cout << "\n";
    for (size_t k = 0; k < levels.by_level.size(); ++k) {
      std::cout << "ch" << k << " chambers:";
      for (int ci : levels.by_level[k]) {
        std::cout << " " << sv_to_string(chambers[ci].sv);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_salvetti(const Options& opt, const ProblemInput& input) {
  const IntersectionLattice lat = IntersectionLattice::build(input.arr);
  const std::vector<Chamber> chambers = enumerate_chambers(input.arr);
  const std::vector<Face> faces = enumerate_faces(input.arr, lat);
  const std::vector<SalvettiCell> cells = salvetti_cells(faces, chambers);
  const std::vector<int> counts = salvetti_counts(cells);
  if (structured(opt)) {
    for (size_t k = 0; k < counts.size(); ++k) {
      std::cout << "salvetti." << k << "=" << counts[k] << "\n";
    }
    std::cout << "euler=" << euler_characteristic(counts) << "\n";
  } else {
    std::cout << "cells:";
    for (int c : counts) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "euler = " << euler_characteristic(counts) << "\n";
  }
  return 0;
}

int run_degrees(const Options& opt, const ProblemInput& input) {
  const IntersectionLattice lat = IntersectionLattice::build(input.arr);
  const ResolvedFlag rf = resolve_flag(opt, input, lat);
  const std::vector<Chamber> chambers = enumerate_chambers(input.arr);
  const ChamberLevels levels = partition_chambers(input.arr, rf.flag, chambers);
  report_flag(opt, rf);
  for (size_t k = 1; k < levels.by_level.size(); ++k) {
    if (levels.by_level[k].empty() || levels.by_level[k - 1].empty()) continue;
    const Arrangement section =
        flag_section(input.arr, rf.flag, static_cast<int>(k));
    if (!structured(opt)) std::cout << "level " << k << ":\n";
    for (size_t j = 0; j < levels.by_level[k].size(); ++j) {
      const Chamber& cell = chambers[levels.by_level[k][j]];
      for (size_t i = 0; i < levels.by_level[k - 1].size(); ++i) {
        const Chamber& target = chambers[levels.by_level[k - 1][i]];
        const int deg =
            cell_degree(section, static_cast<int>(k), cell.sv, target.sv);
        if (structured(opt)) {
          std::cout << "deg." << k << "." << j << "." << i << "=" << deg
                    << "\n";
        } else {
          std::cout << "deg(" << sv_to_string(cell.sv) << ", "
                    << sv_to_string(target.sv) << ") = " << deg << "\n";
        }
      }
    }
  }
  return 0;
}

ChainComplex make_complex(const Options& opt, const ProblemInput& input,
                          ResolvedFlag* rf_out) {
  const IntersectionLattice lat = IntersectionLattice::build(input.arr);
  const ResolvedFlag rf = resolve_flag(opt, input, lat);
  const std::vector<Chamber> chambers = enumerate_chambers(input.arr);
  ChainComplex cc = build_complex(input.arr, lat, rf.flag, chambers);
  if (!boundary_squares_to_zero(cc)) {
    throw invariant_violation("boundary map does not square to zero");
  }
  if (rf_out != nullptr) *rf_out = rf;
  return cc;
}

int run_complex(const Options& opt, const ProblemInput& input) {
  ResolvedFlag rf;
  const ChainComplex cc = make_complex(opt, input, &rf);
  report_flag(opt, rf);
  if (structured(opt)) {
    for (size_t k = 0; k < cc.basis.size(); ++k) {
      std::cout << "basis." << k << "=";
      for (size_t j = 0; j < cc.basis[k].size(); ++j) {
        std::cout << (j ? "," : "") << sv_to_string(cc.chambers[cc.basis[k][j]].sv);
      }
      std::cout << "\n";
    }
    for (size_t k = 1; k < cc.basis.size(); ++k) {
      const LaurentMat& mat = cc.boundary[k];
      for (size_t r = 0; r < mat.size(); ++r) {
        for (size_t c = 0; c < mat[r].size(); ++c) {
          if (mat[r][c].is_zero()) continue;
          std::cout << "boundary." << k << "." << r << "." << c << "="
                    << mat[r][c].str() << "\n";
        }
      }
    }
  } else {
    for (size_t k = 0; k < cc.basis.size(); ++k) {
      std::cout << "basis " << k << ":";
      for (int ci : cc.basis[k]) {
        std::cout << " " << sv_to_string(cc.chambers[ci].sv);
      }
      std::cout << "\n";
    }
    for (size_t k = 1; k < cc.basis.size(); ++k) {
      const LaurentMat& mat = cc.boundary[k];
      for (size_t c = 0; c < cc.basis[k].size(); ++c) {
        std::cout << "d" << k << "[" << sv_to_string(cc.chambers[cc.basis[k][c]].sv)
                  << "] =";
        bool any = false;
        for (size_t r = 0; r < mat.size(); ++r) {
          if (mat[r][c].is_zero()) continue;
          std::cout << (any ? " + (" : " (") << mat[r][c].str() << ")*["
                    << sv_to_string(cc.chambers[cc.basis[k - 1][r]].sv) << "]";
          any = true;
        }
        if (!any) std::cout << " 0";
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int run_homology(const Options& opt, const ProblemInput& input) {
  const std::vector<Rational> q = resolve_weights(opt, input);
  ResolvedFlag rf;
  const ChainComplex cc = make_complex(opt, input, &rf);
  const std::vector<int> h = homology_dims(cc, q);
  report_flag(opt, rf);
  if (structured(opt)) {
    std::cout << "q=" << q_str(q) << "\n";
    for (size_t k = 0; k < h.size(); ++k) {
      std::cout << "homology." << k << "=" << h[k] << "\n";
    }
  } else {
    std::cout << "q = " << q_pretty(q) << "\n";
    std::cout << "h = (";
    for (size_t k = 0; k < h.size(); ++k) {
      std::cout << (k ? ", " : "") << h[k];
    }
    std::cout << ")\n";
  }
  return 0;
}

int run_resonance_scan(const Options& opt, const ProblemInput& input) {
  std::vector<std::vector<Rational>> grid;
  if (!opt.q_grid.empty()) {
    grid = parse_grid(opt.q_grid, input.arr.size());
  } else {
    grid.push_back(resolve_weights(opt, input));
  }
  ResolvedFlag rf;
  const ChainComplex cc = make_complex(opt, input, &rf);
  report_flag(opt, rf);
  int resonant_count = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    const bool res = is_resonant(cc, grid[i]);
    if (res) ++resonant_count;
    if (structured(opt)) {
      std::cout << "scan." << i << ".q=" << q_str(grid[i]) << "\n";
      std::cout << "scan." << i << ".resonant=" << (res ? 1 : 0) << "\n";
    } else {
      std::cout << "q = " << q_pretty(grid[i])
                << ": resonant = " << (res ? "true" : "false") << "\n";
    }
  }
  if (structured(opt)) {
    std::cout << "scan.resonant_count=" << resonant_count << "\n";
  } else {
    std::cout << "resonant points: " << resonant_count << " of " << grid.size()
              << "\n";
  }
  return 0;
}

int run_pi1(const Options& opt, const ProblemInput& input) {
  const IntersectionLattice lat = IntersectionLattice::build(input.arr);
  const ResolvedFlag rf = resolve_flag(opt, input, lat);
  const std::vector<Chamber> chambers = enumerate_chambers(input.arr);
  const Presentation pres = fundamental_group(input.arr, lat, rf.flag, chambers);
  const Abelianization ab = abelianize(pres);
  report_flag(opt, rf);
  if (structured(opt)) {
    std::cout << "pi1.generators=" << pres.generators << "\n";
    for (size_t i = 0; i < pres.relators.size(); ++i) {
      std::cout << "pi1.relator." << i << "=" << word_str(pres.relators[i])
                << "\n";
    }
    std::cout << "pi1.abelianization.rank=" << ab.free_rank << "\n";
    std::cout << "pi1.abelianization.torsion=";
    for (size_t i = 0; i < ab.torsion.size(); ++i) {
      std::cout << (i ? "," : "") << ab.torsion[i].str();
    }
    std::cout << "\n";
  } else {
    std::cout << "generators:";
    for (int g = 1; g <= pres.generators; ++g) {
      std::cout << (g > 1 ? ", " : " ") << "gamma" << g;
    }
    std::cout << "\n";
    for (size_t i = 0; i < pres.relators.size(); ++i) {
      std::cout << "relator " << i + 1 << ": " << word_str(pres.relators[i])
                << "\n";
    }
    std::cout << "abelianization: Z^" << ab.free_rank;
    for (const Int& t : ab.torsion) std::cout << " x Z/" << t.str();
    std::cout << "\n";
  }
  return 0;
}

int dispatch(const Options& opt) {
  const ProblemInput input = load_problem_file(opt.input_path);
  if (opt.command == "lattice") return run_lattice(opt, input);
  if (opt.command == "chambers") return run_chambers(opt, input);
  if (opt.command == "partition") return run_partition(opt, input);
  if (opt.command == "salvetti") return run_salvetti(opt, input);
  if (opt.command == "degrees") return run_degrees(opt, input);
  if (opt.command == "complex") return run_complex(opt, input);
  if (opt.command == "homology") return run_homology(opt, input);
  if (opt.command == "resonance-scan") return run_resonance_scan(opt, input);
  if (opt.command == "pi1") return run_pi1(opt, input);
  throw input_error("unknown command: " + opt.command);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact invariants of real hyperplane arrangements"};
  app.add_option("--input", opt.input_path, "Problem JSON file")->required();
  app.add_option("--command", opt.command,
                 "lattice | chambers | partition | salvetti | degrees | "
                 "complex | homology | resonance-scan | pi1")
      ->required();
  unsigned seed_value = 0;
  CLI::Option* seed_opt =
      app.add_option("--flag-seed", seed_value, "Seed for flag generation");
  app.add_option("--flag-file", opt.flag_file, "JSON file with the flag");
  app.add_option("--q", opt.q_list, "Weights, e.g. 2,3,1/12");
  app.add_option("--q-grid", opt.q_grid,
                 "Assignments separated by ';', e.g. 1,1,1;2,3,5");
  app.add_option("--format", opt.format, "text (default) or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (seed_opt->count() > 0) opt.flag_seed = seed_value;

  try {
    return dispatch(opt);
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const unsupported_dimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
