// io.cpp — JSON problem input (see io.hpp for the accepted document shape).
#include "arrhom/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "arrhom/errors.hpp"

namespace arrhom {
namespace {

using nlohmann::json;

// Coefficients may be JSON integers or "p/q" strings; anything else is a
// user mistake we want to report precisely.
Rational parse_coeff(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rational(static_cast<long long>(value.get<long long>()));
  }
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const input_error& e) {
      throw input_error(where + ": " + e.what());
    }
  }
  throw input_error(where + ": expected an integer or a \"p/q\" string");
}

RVec parse_vector(const json& value, int expect_size, const std::string& where) {
  if (!value.is_array()) throw input_error(where + ": expected an array");
  if (static_cast<int>(value.size()) != expect_size) {
    throw input_error(where + ": expected " + std::to_string(expect_size) +
                      " entries, got " + std::to_string(value.size()));
  }
  RVec out(expect_size);
  for (int i = 0; i < expect_size; ++i) {
    out(i) = parse_coeff(value[i], where + "[" + std::to_string(i) + "]");
  }
  return out;
}

ProblemInput parse_document(const json& doc) {
  if (!doc.is_object()) throw input_error("input document must be a JSON object");
  if (!doc.contains("dim")) throw input_error("missing \"dim\"");
  if (!doc["dim"].is_number_integer()) throw input_error("\"dim\" must be an integer");
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw input_error("\"dim\" must be at least 1");

  if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array()) {
    throw input_error("missing \"hyperplanes\" array");
  }
  std::vector<Hyperplane> planes;
  int row_index = 0;
  for (const json& row : doc["hyperplanes"]) {
    const std::string where = "hyperplanes[" + std::to_string(row_index) + "]";
    // Row layout: [a_1..a_dim, b] for the hyperplane a.x + b = 0.
    RVec coeffs = parse_vector(row, dim + 1, where);
    Hyperplane h;
    h.normal = coeffs.head(dim);
    h.offset = coeffs(dim);
    planes.push_back(std::move(h));
    ++row_index;
  }

  ProblemInput input{Arrangement(dim, std::move(planes)), std::nullopt, std::nullopt};

  if (doc.contains("flag")) {
    const json& flag_doc = doc["flag"];
    if (!flag_doc.is_object() || !flag_doc.contains("base") || !flag_doc.contains("basis")) {
      throw input_error("\"flag\" must be an object with \"base\" and \"basis\"");
    }
    OrientedFlag flag;
    flag.base = parse_vector(flag_doc["base"], dim, "flag.base");
    if (!flag_doc["basis"].is_array() ||
        static_cast<int>(flag_doc["basis"].size()) != dim) {
      throw input_error("flag.basis must list exactly dim vectors");
    }
    flag.basis = RMat(dim, dim);
    for (int k = 0; k < dim; ++k) {
      flag.basis.col(k) = parse_vector(flag_doc["basis"][k], dim,
                                       "flag.basis[" + std::to_string(k) + "]");
    }
    input.flag = std::move(flag);
  }

  if (doc.contains("weights")) {
    const json& weights_doc = doc["weights"];
    if (!weights_doc.is_array() ||
        static_cast<int>(weights_doc.size()) != input.arr.size()) {
      throw input_error("\"weights\" must list one value per hyperplane");
    }
    std::vector<Rational> weights;
    int i = 0;
    for (const json& w : weights_doc) {
      weights.push_back(parse_coeff(w, "weights[" + std::to_string(i) + "]"));
      ++i;
    }
    input.weights = std::move(weights);
  }

  return input;
}

}  // namespace

ProblemInput load_problem_text(const std::string& json_text) {
  json doc = json::parse(json_text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw input_error("malformed JSON input");
  return parse_document(doc);
}

ProblemInput load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_problem_text(buffer.str());
}

std::vector<Rational> parse_weight_list(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::stringstream stream(text);
  while (std::getline(stream, item, ',')) {
    // Trim surrounding spaces; Rational::parse rejects anything else odd.
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw input_error("empty entry in weight list");
    out.push_back(Rational::parse(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw input_error("empty weight list");
  return out;
}

}  // namespace arrhom
