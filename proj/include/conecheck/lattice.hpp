#pragma once

#include <set>

#include "conecheck/arith.hpp"
#include "conecheck/errors.hpp"

namespace conecheck {

/// The base curve of the ruled surface: genus gamma and the degree e of the
/// fixed divisor class E. All other invariants of the setup derive from the
/// pair (gamma, e).
struct BaseCurve {
  Int genus;          // gamma >= 0
  Int marked_degree;  // e >= 1

  BaseCurve(Int gamma, Int e);

  // e >= 2*gamma + 1, the hypothesis under which the base curve is
  // projectively normal and the resolution transform applies.
  bool cg_range() const { return marked_degree >= 2 * genus + 1; }

  // gamma >= 3 and e >= 4*gamma + 5, the range of the dimension ledgers.
  bool main_theorem_range() const {
    return genus >= 3 && marked_degree >= 4 * genus + 5;
  }
};

/// An integer combination coeff_E*E + coeff_q*q + coeff_K*K of the three
/// distinguished divisor classes on the base curve. Every class the formulas
/// need lies in this span; nothing else is representable.
struct BaseDivisorClass {
  Int coeff_E{0};
  Int coeff_q{0};
  Int coeff_K{0};

  static BaseDivisorClass zero() { return {}; }
  static BaseDivisorClass E() { return {1, 0, 0}; }
  static BaseDivisorClass q() { return {0, 1, 0}; }
  static BaseDivisorClass K() { return {0, 0, 1}; }

  bool is_zero() const {
    return coeff_E == 0 && coeff_q == 0 && coeff_K == 0;
  }

  friend BaseDivisorClass operator+(const BaseDivisorClass& a,
                                    const BaseDivisorClass& b) {
    return {a.coeff_E + b.coeff_E, a.coeff_q + b.coeff_q,
            a.coeff_K + b.coeff_K};
  }
  friend BaseDivisorClass operator-(const BaseDivisorClass& a,
                                    const BaseDivisorClass& b) {
    return {a.coeff_E - b.coeff_E, a.coeff_q - b.coeff_q,
            a.coeff_K - b.coeff_K};
  }
  friend BaseDivisorClass operator-(const BaseDivisorClass& a) {
    return {-a.coeff_E, -a.coeff_q, -a.coeff_K};
  }
  friend BaseDivisorClass operator*(const Int& n, const BaseDivisorClass& a) {
    return {n * a.coeff_E, n * a.coeff_q, n * a.coeff_K};
  }
  friend bool operator==(const BaseDivisorClass&,
                         const BaseDivisorClass&) = default;
};

/// Element a*Gamma0 + B*f of the Picard lattice of the ruled surface S.
struct SurfaceDivisorClass {
  Int gamma0_coeff{0};
  BaseDivisorClass fiber_part{};

  static SurfaceDivisorClass zero() { return {}; }
  static SurfaceDivisorClass gamma0() { return {1, {}}; }
  static SurfaceDivisorClass fiber(BaseDivisorClass b) {
    return {0, std::move(b)};
  }

  friend SurfaceDivisorClass operator+(const SurfaceDivisorClass& a,
                                       const SurfaceDivisorClass& b) {
    return {a.gamma0_coeff + b.gamma0_coeff, a.fiber_part + b.fiber_part};
  }
  friend SurfaceDivisorClass operator-(const SurfaceDivisorClass& a,
                                       const SurfaceDivisorClass& b) {
    return {a.gamma0_coeff - b.gamma0_coeff, a.fiber_part - b.fiber_part};
  }
  friend SurfaceDivisorClass operator*(const Int& n,
                                       const SurfaceDivisorClass& a) {
    return {n * a.gamma0_coeff, n * a.fiber_part};
  }
  friend bool operator==(const SurfaceDivisorClass&,
                         const SurfaceDivisorClass&) = default;
};

enum class H0Mode {
  strict,         // refuse special-range classes the model cannot evaluate
  general_class,  // fall back to max(0, deg - gamma + 1)
};

struct H0Policy {
  H0Mode mode = H0Mode::strict;
};

/// deg(B) = coeff_E*e + coeff_q + coeff_K*(2*gamma - 2), exactly.
Int degree_base(const BaseDivisorClass& b, const BaseCurve& curve);

/// Intersection product on Pic(S): Gamma0^2 = -e, Gamma0.f = 1, f.f = 0.
Int intersect(const SurfaceDivisorClass& d1, const SurfaceDivisorClass& d2,
              const BaseCurve& curve);

/// K_S = -2*Gamma0 + (K - E)*f.
SurfaceDivisorClass canonical_surface(const BaseCurve& curve);

/// (D^2 + D.K_S)/2 + 1. Throws ParityError when the numerator is odd.
Int adjunction_genus(const SurfaceDivisorClass& d, const BaseCurve& curve);

/// Degree of the image of D under the cone embedding: D.(Gamma0 + E*f).
Int degree_under_embedding(const SurfaceDivisorClass& d,
                           const BaseCurve& curve);

/// h^0 of a base divisor class. Nonspecial degrees go through Riemann-Roch;
/// the special range [0, 2*gamma-2] is evaluated only for the zero class and
/// for k*q (general point), otherwise the policy decides.
Int h0_base(const BaseDivisorClass& b, const BaseCurve& curve,
            const H0Policy& policy = {});

/// h^0 of a surface class via the pushforward splitting:
/// sum over k = 0..a of h0_base(B - k*E). Classes with a < 0 get 0.
Int h0_surface(const SurfaceDivisorClass& d, const BaseCurve& curve,
               const H0Policy& policy = {});

/// The hyperplane class Gamma0 + E*f of the cone embedding.
SurfaceDivisorClass hyperplane_class();

/// The class m*Gamma0 + (m*E + q)*f of the degree-(me+1) curve on the cone.
SurfaceDivisorClass cone_curve_class(const Int& m);

/// All integer roots a of  e*a^2 - ((2m+1)e + 2*gamma)*a + m(m+1)e + 2m*gamma,
/// where m is determined by d = me + 1. Exact rational root computation; no
/// floating point. Throws InvariantMismatch when (d, g) fit no integer m.
std::set<Int> solve_multiplicity(const Int& d, const Int& g,
                                 const BaseCurve& curve);

}  // namespace conecheck
