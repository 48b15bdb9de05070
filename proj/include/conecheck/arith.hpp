#pragma once

#include <gmpxx.h>

#include <string>

namespace conecheck {

// All lattice and ledger arithmetic is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms.
using Int = mpz_class;
using Rat = mpq_class;

// C(n, k) for integer n (possibly negative) and small non-negative k,
// expanded as the falling factorial n(n-1)...(n-k+1)/k!.
inline Int binomial(const Int& n, unsigned long k) {
  Int num = 1;
  Int den = 1;
  for (unsigned long i = 0; i < k; ++i) {
    num *= n - static_cast<long>(i);
    den *= static_cast<long>(i) + 1;
  }
  return num / den;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace conecheck
