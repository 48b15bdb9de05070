#include "conecheck/lattice.hpp"

#include <stdexcept>

namespace conecheck {

BaseCurve::BaseCurve(Int gamma, Int e)
    : genus(std::move(gamma)), marked_degree(std::move(e)) {
  if (genus < 0) throw std::invalid_argument("BaseCurve: genus must be >= 0");
  if (marked_degree < 1)
    throw std::invalid_argument("BaseCurve: marked degree must be >= 1");
}

Int degree_base(const BaseDivisorClass& b, const BaseCurve& curve) {
  return b.coeff_E * curve.marked_degree + b.coeff_q +
         b.coeff_K * (2 * curve.genus - 2);
}

Int intersect(const SurfaceDivisorClass& d1, const SurfaceDivisorClass& d2,
              const BaseCurve& curve) {
  return -d1.gamma0_coeff * d2.gamma0_coeff * curve.marked_degree +
         d1.gamma0_coeff * degree_base(d2.fiber_part, curve) +
         d2.gamma0_coeff * degree_base(d1.fiber_part, curve);
}

SurfaceDivisorClass canonical_surface(const BaseCurve&) {
  return {-2, BaseDivisorClass::K() - BaseDivisorClass::E()};
}

Int adjunction_genus(const SurfaceDivisorClass& d, const BaseCurve& curve) {
  Int twice = intersect(d, d, curve) + intersect(d, canonical_surface(curve), curve);
  if (twice % 2 != 0)
    throw ParityError("adjunction_genus: D^2 + D.K_S is odd, no integral genus");
  return twice / 2 + 1;
}

SurfaceDivisorClass hyperplane_class() {
  return {1, BaseDivisorClass::E()};
}

SurfaceDivisorClass cone_curve_class(const Int& m) {
  return {m, m * BaseDivisorClass::E() + BaseDivisorClass::q()};
}

Int degree_under_embedding(const SurfaceDivisorClass& d,
                           const BaseCurve& curve) {
  return intersect(d, hyperplane_class(), curve);
}

Int h0_base(const BaseDivisorClass& b, const BaseCurve& curve,
            const H0Policy& policy) {
  const Int deg = degree_base(b, curve);
  const Int& gamma = curve.genus;
  if (deg < 0) return 0;
  if (deg > 2 * gamma - 2) return deg - gamma + 1;
  // Special range [0, 2*gamma - 2].
  if (b.is_zero()) return 1;
  if (b.coeff_E == 0 && b.coeff_K == 0 && b.coeff_q >= 0) {
    // k general points on a positive-genus curve; the general point is
    // non-Weierstrass.
    Int rr = b.coeff_q - gamma + 1;
    return rr > 1 ? rr : Int(1);
  }
  if (policy.mode == H0Mode::general_class) {
    Int rr = deg - gamma + 1;
    return rr > 0 ? rr : Int(0);
  }
  throw SpecialRangeError(
      "h0_base: class of degree " + to_string(deg) +
      " lies in the special range [0, 2*gamma-2] and is not recognized");
}

Int h0_surface(const SurfaceDivisorClass& d, const BaseCurve& curve,
               const H0Policy& policy) {
  if (d.gamma0_coeff < 0) return 0;
  Int total = 0;
  for (Int k = 0; k <= d.gamma0_coeff; ++k) {
    total += h0_base(d.fiber_part - k * BaseDivisorClass::E(), curve, policy);
  }
  return total;
}

std::set<Int> solve_multiplicity(const Int& d, const Int& g,
                                 const BaseCurve& curve) {
  const Int& e = curve.marked_degree;
  const Int& gamma = curve.genus;
  if ((d - 1) % e != 0)
    throw InvariantMismatch("solve_multiplicity: d - 1 is not a multiple of e");
  const Int m = (d - 1) / e;
  if (m < 1)
    throw InvariantMismatch("solve_multiplicity: d = me + 1 needs m >= 1");
  if (g != binomial(m, 2) * e + m * gamma)
    throw InvariantMismatch(
        "solve_multiplicity: g does not match (m choose 2)e + m*gamma for m = " +
        to_string(m));

  // e*a^2 - ((2m+1)e + 2*gamma)*a + m(m+1)e + 2m*gamma = 0, solved exactly.
  const Int qa = e;
  const Int qb = -((2 * m + 1) * e + 2 * gamma);
  const Int qc = m * (m + 1) * e + 2 * m * gamma;
  const Int disc = qb * qb - 4 * qa * qc;

  std::set<Int> roots;
  if (disc < 0) return roots;
  Int s = sqrt(disc);
  if (s * s != disc) return roots;  // irrational roots, no integer solutions
  for (const Int& num : {Int(-qb + s), Int(-qb - s)}) {
    Rat root = make_rat(num, 2 * qa);
    if (root.get_den() == 1) roots.insert(Int(root.get_num()));
  }
  return roots;
}

}  // namespace conecheck
