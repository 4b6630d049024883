#include "arrhom/arrangement.hpp"

#include <stdexcept>

namespace arrhom {

std::string sv_to_string(const SignVector& sv) {
  std::string s;
  s.reserve(sv.size());
  for (int8_t v : sv) s += (v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return s;
}

SignVector sv_from_string(const std::string& text) {
  SignVector sv;
  sv.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': sv.push_back(1); break;
      case '-': sv.push_back(-1); break;
      case '0': sv.push_back(0); break;
      default:
        throw input_error(std::string("bad sign vector character '") + c +
                          "'");
    }
  }
  return sv;
}

bool sv_face_leq(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && x[i] != y[i]) return false;
  }
  return true;
}

SignVector sv_compose(const SignVector& x, const SignVector& c) {
  SignVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = (x[i] != 0) ? x[i] : c[i];
  }
  return out;
}

std::vector<int> separating_set(const SignVector& a, const SignVector& b) {
  std::vector<int> sep;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0 && a[i] != b[i]) {
      sep.push_back(static_cast<int>(i));
    }
  }
  return sep;
}

uint64_t sv_zero_mask(const SignVector& sv) {
  uint64_t mask = 0;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (sv[i] == 0) mask |= (uint64_t{1} << i);
  }
  return mask;
}

bool sv_lex_less(const SignVector& a, const SignVector& b) {
  return a < b;  // std::vector<int8_t> lexicographic compare, -1 < 0 < 1
}

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hs_(std::move(hyperplanes)) {
  if (dim_ < 1) throw input_error("ambient dimension must be at least 1");
  if (hs_.size() > 64) {
    throw input_error("arrangements are limited to 64 hyperplanes");
  }
  for (std::size_t i = 0; i < hs_.size(); ++i) {
    if (hs_[i].normal.size() != dim_) {
      throw input_error("hyperplane " + std::to_string(i + 1) +
                        " has a normal of the wrong dimension");
    }
    bool all_zero = true;
    for (int c = 0; c < dim_; ++c) {
      if (!hs_[i].normal(c).is_zero()) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      throw input_error("hyperplane " + std::to_string(i + 1) +
                        " has a zero normal vector");
    }
  }
  // Reject projectively equal rows (normal_i | offset_i) = t (normal_j |
  // offset_j): cross-multiply every component pair.
  for (std::size_t i = 0; i < hs_.size(); ++i) {
    for (std::size_t j = i + 1; j < hs_.size(); ++j) {
      RVec a(dim_ + 1), b(dim_ + 1);
      a.head(dim_) = hs_[i].normal;
      a(dim_) = hs_[i].offset;
      b.head(dim_) = hs_[j].normal;
      b(dim_) = hs_[j].offset;
      bool proportional = true;
      for (int p = 0; p < dim_ + 1 && proportional; ++p) {
        for (int q = p + 1; q < dim_ + 1; ++q) {
          if (a(p) * b(q) != a(q) * b(p)) {
            proportional = false;
            break;
          }
        }
      }
      if (proportional) {
        throw input_error("hyperplanes " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " coincide");
      }
    }
  }
}

SignVector Arrangement::sign_vector_at(const RVec& x) const {
  SignVector sv(hs_.size());
  for (std::size_t i = 0; i < hs_.size(); ++i) {
    sv[i] = static_cast<int8_t>(hs_[i].value_at(x).sign());
  }
  return sv;
}

std::size_t Arrangement::at(int i) const {
  if (i < 0 || i >= size()) {
    throw std::out_of_range("hyperplane index out of range");
  }
  return static_cast<std::size_t>(i);
}

}  // namespace arrhom
