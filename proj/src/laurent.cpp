#include "arrhom/laurent.hpp"

#include <sstream>

#include "arrhom/errors.hpp"

namespace arrhom {

LaurentPoly LaurentPoly::constant(int nvars, const Int& c) {
  return monomial(nvars, Expo(nvars, 0), c);
}

LaurentPoly LaurentPoly::monomial(int nvars, const Expo& e, const Int& c) {
  if (static_cast<int>(e.size()) != nvars) {
    throw invariant_violation("monomial exponent vector has wrong length");
  }
  LaurentPoly p(nvars);
  if (c != 0) p.terms_[e] = c;
  return p;
}

void LaurentPoly::set(const Expo& e, Int c) {
  if (c == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = std::move(c);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (nvars_ != other.nvars_) {
    throw invariant_violation("mixed variable counts in Laurent arithmetic");
  }
  for (const auto& [e, c] : other.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  return *this += -other;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  out += other;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  out -= other;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw invariant_violation("mixed variable counts in Laurent arithmetic");
  }
  LaurentPoly out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_[e] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Int a = negative ? Int(-c) : c;

    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'q';
      mono += std::to_string(i + 1);
      if (e[i] != 1) {
        mono += '^';
        mono += std::to_string(e[i]);
      }
    }

    std::string term;
    if (mono.empty()) {
      term = a.str();
    } else if (a == 1) {
      term = mono;
    } else {
      term = a.str() + "*" + mono;
    }

    if (first) {
      os << (negative ? "-" : "") << term;
      first = false;
    } else {
      os << (negative ? " - " : " + ") << term;
    }
  }
  return os.str();
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& q) const {
  if (static_cast<int>(q.size()) != nvars_) {
    throw input_error("weight vector length does not match variable count");
  }
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term{c};
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] != 0) term *= pow(q[i], e[i]);
    }
    total += term;
  }
  return total;
}

bool try_exact_divide(const LaurentPoly& num, const LaurentPoly& den,
                      LaurentPoly& out) {
  if (den.is_zero()) {
    throw invariant_violation("division by the zero Laurent polynomial");
  }
  const int n = num.nvars();
  out = LaurentPoly(n);
  LaurentPoly rem = num;
  const auto& dlead = *den.terms().begin();
  // For a true divisor each step strips the leading term of the remaining
  // quotient, so the loop runs once per quotient term; the guard only trips
  // on non-divisors, whose expansion may not terminate in the Laurent ring.
  for (int guard = 0; !rem.is_zero(); ++guard) {
    if (guard > 100000) return false;
    const auto& rlead = *rem.terms().begin();
    if (rlead.second % dlead.second != 0) return false;
    LaurentPoly::Expo e(n);
    for (int i = 0; i < n; ++i) e[i] = rlead.first[i] - dlead.first[i];
    LaurentPoly t =
        LaurentPoly::monomial(n, e, rlead.second / dlead.second);
    out += t;
    rem -= t * den;
  }
  return true;
}

LaurentMat laurent_mul(const LaurentMat& a, const LaurentMat& b) {
  if (a.empty() || b.empty()) return {};
  const size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  if (a[0].size() != inner) {
    throw invariant_violation("Laurent matrix shapes do not match");
  }
  const int n = a[0][0].nvars();
  LaurentMat out(rows, std::vector<LaurentPoly>(cols, LaurentPoly(n)));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

bool laurent_is_zero(const LaurentMat& m) {
  for (const auto& row : m) {
    for (const auto& entry : row) {
      if (!entry.is_zero()) return false;
    }
  }
  return true;
}

int laurent_rank(LaurentMat m, int max_dim) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  if (rows > max_dim || cols > max_dim) {
    throw invariant_violation("symbolic rank is limited to small matrices");
  }
  const int n = m[0][0].nvars();

  // Fraction-free (Bareiss) elimination: every division is exact in the ring.
  LaurentPoly prev = LaurentPoly::constant(n, 1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        LaurentPoly numerator = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        LaurentPoly quotient(n);
        if (!try_exact_divide(numerator, prev, quotient)) {
          throw invariant_violation("fraction-free pivot division failed");
        }
        m[i][j] = std::move(quotient);
      }
      m[i][col] = LaurentPoly(n);
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

LaurentPoly transport(int nvars, const std::vector<int>& sep, int direction) {
  LaurentPoly::Expo e(nvars, 0);
  for (int i : sep) {
    if (i < 0 || i >= nvars) {
      throw invariant_violation("separating index out of range");
    }
    e[i] += direction > 0 ? 1 : -1;
  }
  return LaurentPoly::monomial(nvars, e, 1);
}

LaurentPoly skein(int nvars, const std::vector<int>& sep) {
  return transport(nvars, sep, +1) - transport(nvars, sep, -1);
}

}  // namespace arrhom
