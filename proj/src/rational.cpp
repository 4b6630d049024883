#include "arrhom/rational.hpp"

#include <cctype>

namespace arrhom {

namespace {

bool valid_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_literal(text)) {
      throw input_error("bad rational literal: '" + text + "'");
    }
    return Rational(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den)) {
    throw input_error("bad rational literal: '" + text + "'");
  }
  const Int d(den);
  if (d == 0) throw input_error("bad rational literal (zero denominator): '" +
                                text + "'");
  return Rational(Int(num), d);
}

Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r.is_zero() && e < 0) {
    throw input_error("cannot raise zero to a negative power");
  }
  Rational base = e > 0 ? r : Rational(1) / r;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-(e + 1)) + 1UL;
  Rational acc(1);
  while (n != 0) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace arrhom
