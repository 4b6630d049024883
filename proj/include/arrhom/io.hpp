// io.hpp — JSON problem input.
//
// Format (each coefficient is a JSON integer or a string like "-3/4"):
// {
//   "dim": 2,
//   "hyperplanes": [ [17, -28, "-1190"], ... ],   // row = [a_1..a_dim, b]
//   "flag":        { "base": ["140", "20"],
//                    "basis": [ ["1", "0"], ["0", "1"] ] },   // optional
//   "weights":     ["2", "3", "1/12"]                          // optional
// }
// A hyperplane row [a_1..a_dim, b] is the locus a.x + b = 0.
// "basis" lists the flag vectors v_1..v_d in order.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrhom/arrangement.hpp"
#include "arrhom/flag.hpp"

namespace arrhom {

struct ProblemInput {
  Arrangement arr;
  std::optional<OrientedFlag> flag;
  std::optional<std::vector<Rational>> weights;
};

ProblemInput load_problem_text(const std::string& json_text);
ProblemInput load_problem_file(const std::string& path);

// "2,3,1/12" -> weights; used for CLI overrides.
std::vector<Rational> parse_weight_list(const std::string& text);

}  // namespace arrhom
