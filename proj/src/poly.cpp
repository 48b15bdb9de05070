#include "conecheck/poly.hpp"

#include <sstream>

namespace conecheck {

RationalPoly::RationalPoly(std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(Rat c) {
  return RationalPoly({std::move(c)});
}

RationalPoly RationalPoly::monomial(Rat c, std::size_t power) {
  std::vector<Rat> v(power + 1, Rat(0));
  v[power] = std::move(c);
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RationalPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

Rat RationalPoly::evaluate(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(i) + b.coeff(i);
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.coeff(i) - b.coeff(i);
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const Rat& c, const RationalPoly& a) {
  std::vector<Rat> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return RationalPoly(std::move(out));
}

std::string RationalPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (i == 0 || !unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalPoly binomial_in_t(const Int& shift, unsigned long n) {
  // product over j = 1..n of (t - shift + j), divided by n!.
  RationalPoly p = RationalPoly::constant(Rat(1));
  Int fact = 1;
  for (unsigned long j = 1; j <= n; ++j) {
    p = p * RationalPoly({Rat(j - shift), Rat(1)});
    fact *= static_cast<long>(j);
  }
  return make_rat(1, fact) * p;
}

}  // namespace conecheck
