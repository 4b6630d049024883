// errors.hpp — exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace arrhom {

// Malformed or inconsistent user input (bad rational literal, duplicate
// hyperplanes, wrong weight count, non-generic flag supplied by hand, ...).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed (e.g. the composed boundary maps do
// not square to zero). Indicates a bug or numerically impossible data, never
// a user mistake.
class invariant_violation : public std::runtime_error {
 public:
  explicit invariant_violation(const std::string& what)
      : std::runtime_error(what) {}
};

// Requested an operation outside the supported ambient dimension range
// (degree maps and twisted complexes are implemented for dimension <= 3).
class unsupported_dimension : public std::runtime_error {
 public:
  explicit unsupported_dimension(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace arrhom
