// rational.hpp — exact arbitrary-precision rational scalar.
//
// Thin value wrapper around boost::multiprecision::cpp_rational. The wrapper
// (a) pins down the constructor set so the type composes cleanly with Eigen
// expression templates (the raw boost type's greedy converting constructors
// derail Eigen's scalar-promotion overload resolution), and (b) carries the
// parsing/printing contract used by the CLI ("p", "-p", "p/q").
//
// Invariants (guaranteed by the backing type): always in lowest terms,
// denominator > 0. Division by zero and "p/0" literals throw.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "arrhom/errors.hpp"

namespace arrhom {

using Int = boost::multiprecision::cpp_int;

class Rational {
  using Backing = boost::multiprecision::cpp_rational;

 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}        // NOLINT: implicit by design
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {} // NOLINT: implicit by design
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    v_ = Backing(num);
    v_ /= Backing(den);
  }
  explicit Rational(Backing v) : v_(std::move(v)) {}

  // Accepts "p", "-p", "+p", "p/q" (whitespace-free). Throws input_error on
  // anything else, including zero denominators.
  static Rational parse(const std::string& text);

  Int num() const { return boost::multiprecision::numerator(v_); }
  Int den() const { return boost::multiprecision::denominator(v_); }
  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }

  std::string str() const {
    if (den() == 1) return num().str();
    return num().str() + "/" + den().str();
  }
  double to_double() const { return v_.convert_to<double>(); }

  Rational operator-() const { return Rational(Backing(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw input_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational abs(const Rational& r) {
    return Rational(Backing(boost::multiprecision::abs(r.v_)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  Backing v_;
};

// r^e for any integer e; e < 0 inverts (throws on zero base).
Rational pow(const Rational& r, long e);

}  // namespace arrhom
