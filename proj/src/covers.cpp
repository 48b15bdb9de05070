#include "conecheck/covers.hpp"

namespace conecheck {

CoverData::CoverData(BaseCurve b, Int m)
    : base(std::move(b)), multiplicity(std::move(m)) {
  if (multiplicity < 2)
    throw UnsupportedMultiplicity("CoverData: multiplicity must be >= 2");
  if (!base.cg_range())
    throw std::invalid_argument("CoverData: base curve needs e >= 2*gamma + 1");
}

SurfaceDivisorClass ramification_class(const CoverData& c) {
  const Int& m = c.multiplicity;
  return {m - 2, (m - 1) * BaseDivisorClass::E() + BaseDivisorClass::q()};
}

Int ramification_degree(const CoverData& c) {
  const Int& m = c.multiplicity;
  return (m - 1) * (m * c.base.marked_degree + 2);
}

BaseDivisorClass branch_half_class(const CoverData& c) {
  const Int& m = c.multiplicity;
  return {m * (m - 1) / 2, m - 1, 0};
}

bool riemann_hurwitz_check(const CoverData& c) {
  const Int& m = c.multiplicity;
  const Int& e = c.base.marked_degree;
  const Int& gamma = c.base.genus;
  const Int g = binomial(m, 2) * e + m * gamma;
  return 2 * g - 2 == m * (2 * gamma - 2) + ramification_degree(c);
}

std::vector<BaseDivisorClass> pushforward_summands(const CoverData& c,
                                                   bool twisted_by_vertex) {
  if (c.multiplicity != 3)
    throw UnsupportedMultiplicity(
        "pushforward_summands: splitting is available only for m = 3");
  const auto E = BaseDivisorClass::E();
  const auto q = BaseDivisorClass::q();
  if (twisted_by_vertex)
    return {BaseDivisorClass::zero(), -E, Int(-2) * E - q};
  return {BaseDivisorClass::zero(), -E - q, Int(-2) * E - q};
}

Int twisted_normal_part_degree(const BaseCurve& curve, const Int& n,
                               const Int& c) {
  return n * (3 * curve.marked_degree + 1) + c;
}

}  // namespace conecheck
