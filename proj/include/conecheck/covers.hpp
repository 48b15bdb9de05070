#pragma once

#include <vector>

#include "conecheck/lattice.hpp"

namespace conecheck {

/// The m:1 cover of the cone's base curve induced by projection from the
/// vertex. Requires m >= 2 and the base in the projectively normal range.
struct CoverData {
  BaseCurve base;
  Int multiplicity;

  CoverData(BaseCurve b, Int m);
};

/// A line-bundle degree on the cone curve written as n*(hyperplane degree) + c.
struct CurveLineBundleDegree {
  Int hyperplane_twist;  // n
  Int point_correction;  // c

  Int total_degree(const Int& embedding_degree) const {
    return hyperplane_twist * embedding_degree + point_correction;
  }
};

/// The unrestricted surface class (m-2)*Gamma0 + ((m-1)E + q)*f whose
/// restriction to the cone curve is the ramification divisor.
SurfaceDivisorClass ramification_class(const CoverData& c);

/// deg R = (m-1)(me + 2).
Int ramification_degree(const CoverData& c);

/// One half of the branch class on the base: (m(m-1)/2)*E + (m-1)*q.
BaseDivisorClass branch_half_class(const CoverData& c);

/// Executable Riemann-Hurwitz consistency assertion:
/// 2g - 2 = m(2*gamma - 2) + deg R with g = (m choose 2)e + m*gamma.
bool riemann_hurwitz_check(const CoverData& c);

/// The three line-bundle summands of the pushforward of the structure sheaf,
/// twisted by the vertex point or not. Defined only for m = 3.
std::vector<BaseDivisorClass> pushforward_summands(const CoverData& c,
                                                   bool twisted_by_vertex);

/// Degree n*(3e+1) + c of a twist of the m = 3 cone curve.
Int twisted_normal_part_degree(const BaseCurve& curve, const Int& n,
                               const Int& c);

}  // namespace conecheck
