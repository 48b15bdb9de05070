#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conecheck/arith.hpp"

namespace conecheck {

/// Univariate polynomial in t with exact rational coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rat> coeffs);  // coeffs[i] * t^i

  static RationalPoly constant(Rat c);
  static RationalPoly monomial(Rat c, std::size_t power);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t k) const;
  bool is_zero() const { return coeffs_.empty(); }

  Rat evaluate(const Rat& t) const;

  // "a*t + b" style; rationals in lowest terms, zero terms omitted.
  std::string str() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rat& c, const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// C(t - shift + n, n) expanded as a degree-n polynomial in t.
RationalPoly binomial_in_t(const Int& shift, unsigned long n);

}  // namespace conecheck
