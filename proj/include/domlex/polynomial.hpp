#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domlex/bigint.hpp"

namespace domlex {

// Dense univariate polynomial with exact arbitrary-precision integer
// coefficients, stored in ascending degree. Canonical form: no trailing zero
// coefficient; the zero polynomial is the empty coefficient vector.
class IntPoly {
public:
  IntPoly() = default;  // zero polynomial

  explicit IntPoly(std::vector<BigInt> ascending_coeffs)
      : coeffs_(std::move(ascending_coeffs)) {
    normalize();
  }

  IntPoly(std::initializer_list<long long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (long long c : ascending_coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static IntPoly constant(BigInt c) {
    std::vector<BigInt> v;
    if (c != 0) v.push_back(std::move(c));
    return IntPoly(std::move(v));
  }

  static IntPoly monomial(int degree, BigInt coeff = 1) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<BigInt> v;
    if (coeff != 0) {
      v.resize(static_cast<std::size_t>(degree) + 1);
      v.back() = std::move(coeff);
    }
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  // Coefficient of x^i; zero beyond the degree.
  const BigInt& coefficient(int i) const {
    static const BigInt kZero = 0;
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
      if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
    }
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
      if (i < b.coeffs_.size()) c[i] -= b.coeffs_[i];
    }
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(c));
  }

  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

// p^k by repeated squaring; power(p, 0) == 1.
inline IntPoly power(const IntPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("power exponent must be >= 0");
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

// (1+x)^t - 1, computed from the exact binomial row.
inline IntPoly binomial_shift(int t) {
  if (t < 0) throw std::invalid_argument("binomial_shift exponent must be >= 0");
  std::vector<BigInt> c(static_cast<std::size_t>(t) + 1);
  BigInt binom = 1;  // C(t, k), k ascending
  for (int k = 1; k <= t; ++k) {
    binom *= t - k + 1;
    binom /= k;
    c[static_cast<std::size_t>(k)] = binom;
  }
  return IntPoly(std::move(c));
}

// p(q(x)) by Horner accumulation over p's coefficients, highest first.
inline IntPoly compose(const IntPoly& p, const IntPoly& q) {
  IntPoly result;
  for (int i = p.degree(); i >= 0; --i)
    result = result * q + IntPoly::constant(p.coefficient(i));
  return result;
}

inline BigInt evaluate(const IntPoly& p, const BigInt& v) {
  BigInt result = 0;
  for (int i = p.degree(); i >= 0; --i) result = result * v + p.coefficient(i);
  return result;
}

// Smallest degree with a nonzero coefficient; nullopt for the zero polynomial.
inline std::optional<int> min_degree_nonzero(const IntPoly& p) {
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

// Ascending-degree text form, e.g. "4x^2 + 4x^3 + x^4" or "-1 + x^4".
// Zero terms are omitted, unit coefficients on x-powers are omitted.
inline std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const BigInt& c = p.coefficient(i);
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

// Decimal-string coefficients, ascending degree (exact at any magnitude).
inline std::vector<std::string> coefficient_strings(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const BigInt& c : p.coefficients()) out.push_back(c.str());
  return out;
}

}  // namespace domlex
