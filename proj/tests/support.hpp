// support.hpp — minimal always-on test harness.
//
// Tests are plain main() binaries: a list of named gates, one [PASS]/[FAIL]
// line each, exit 0 only when every gate passes. CHECK never compiles out.
#pragma once

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace testkit {

struct GateFailure {
  std::string message;
};

// Always-on requirement with location and context.
#define CHECK(cond, msg)                                              \
  do {                                                                \
    if (!(cond)) {                                                    \
      std::ostringstream check_out_;                                  \
      check_out_ << __FILE__ << ":" << __LINE__ << "  " << msg;       \
      throw ::testkit::GateFailure{check_out_.str()};                 \
    }                                                                 \
  } while (0)

// Equality with both values printed (operands must be streamable).
#define CHECK_EQ(a, b, msg)                                           \
  do {                                                                \
    const auto va_ = (a);                                             \
    const auto vb_ = (b);                                             \
    if (!(va_ == vb_)) {                                              \
      std::ostringstream check_out_;                                  \
      check_out_ << __FILE__ << ":" << __LINE__ << "  " << msg        \
                 << "  (got " << va_ << ", want " << vb_ << ")";      \
      throw ::testkit::GateFailure{check_out_.str()};                 \
    }                                                                 \
  } while (0)

struct Gate {
  std::string name;
  std::function<void()> fn;
};

inline int run_gates(const std::vector<Gate>& gates) {
  int failed = 0;
  for (const Gate& gate : gates) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      gate.fn();
    } catch (const GateFailure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = std::string("unexpected exception: ") + e.what();
    } catch (...) {
      error = "unexpected non-standard exception";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (error.empty()) {
      std::cout << "[PASS] " << gate.name << " (" << ms << " ms)\n";
    } else {
      std::cout << "[FAIL] " << gate.name << " — " << error << "\n";
      ++failed;
    }
  }
  if (failed == 0) {
    std::cout << "all " << gates.size() << " gates passed\n";
    return 0;
  }
  std::cout << failed << " of " << gates.size() << " gates FAILED\n";
  return 1;
}

// True when fn throws exactly E (used for error-contract gates).
template <typename E, typename Fn>
bool throws(Fn&& fn) {
  try {
    fn();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace testkit
