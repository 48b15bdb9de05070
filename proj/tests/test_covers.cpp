#include <doctest.h>

#include "conecheck/covers.hpp"

using namespace conecheck;

TEST_CASE("cover data validation") {
  CHECK_THROWS_AS(CoverData(BaseCurve(3, 17), 1), UnsupportedMultiplicity);
  CHECK_THROWS_AS(CoverData(BaseCurve(3, 6), 2), std::invalid_argument);
  CHECK_NOTHROW(CoverData(BaseCurve(3, 17), 2));
}

TEST_CASE("ramification class") {
  const BaseCurve curve(3, 17);
  const auto r3 = ramification_class(CoverData(curve, 3));
  CHECK(r3.gamma0_coeff == 1);
  CHECK(r3.fiber_part ==
        Int(2) * BaseDivisorClass::E() + BaseDivisorClass::q());
  const auto r2 = ramification_class(CoverData(curve, 2));
  CHECK(r2.gamma0_coeff == 0);
  CHECK(r2.fiber_part == BaseDivisorClass::E() + BaseDivisorClass::q());
  CHECK(intersect(r2, cone_curve_class(2), curve) == 36);
}

TEST_CASE("ramification degree") {
  CHECK(ramification_degree(CoverData(BaseCurve(3, 17), 3)) == 106);
  CHECK(ramification_degree(CoverData(BaseCurve(5, 17), 2)) == 36);
}

TEST_CASE("ramification degree matches the intersection product") {
  for (long gamma = 0; gamma <= 10; ++gamma) {
    for (long e = 2 * gamma + 1; e <= 2 * gamma + 40; ++e) {
      const BaseCurve curve(gamma, e);
      for (long m = 2; m <= 10; ++m) {
        const CoverData cover(curve, m);
        CHECK(intersect(ramification_class(cover), cone_curve_class(m), curve) ==
              ramification_degree(cover));
      }
    }
  }
}

TEST_CASE("branch half class") {
  const BaseCurve curve(3, 17);
  const auto b3 = branch_half_class(CoverData(curve, 3));
  CHECK(b3 == BaseDivisorClass{3, 2, 0});
  CHECK(degree_base(b3, curve) == 3 * 17 + 2);
  CHECK(branch_half_class(CoverData(curve, 2)) == BaseDivisorClass{1, 1, 0});
  for (long m = 2; m <= 10; ++m) {
    const CoverData cover(curve, m);
    CHECK(2 * degree_base(branch_half_class(cover), curve) ==
          ramification_degree(cover));
  }
}

TEST_CASE("riemann-hurwitz identity") {
  CHECK(riemann_hurwitz_check(CoverData(BaseCurve(3, 17), 3)));
  CHECK(riemann_hurwitz_check(CoverData(BaseCurve(0, 3), 2)));
  CHECK(riemann_hurwitz_check(CoverData(BaseCurve(1, 3), 2)));
  for (long gamma = 0; gamma <= 10; ++gamma)
    for (long e = 2 * gamma + 1; e <= 2 * gamma + 40; ++e)
      for (long m = 2; m <= 10; ++m)
        CHECK(riemann_hurwitz_check(CoverData(BaseCurve(gamma, e), m)));
}

TEST_CASE("pushforward summands for the triple cover") {
  const BaseCurve curve(3, 17);
  const CoverData cover(curve, 3);
  const auto E = BaseDivisorClass::E();
  const auto q = BaseDivisorClass::q();

  const auto twisted = pushforward_summands(cover, true);
  REQUIRE(twisted.size() == 3);
  CHECK(twisted[0] == BaseDivisorClass::zero());
  CHECK(twisted[1] == -E);
  CHECK(twisted[2] == Int(-2) * E - q);

  const auto untwisted = pushforward_summands(cover, false);
  REQUIRE(untwisted.size() == 3);
  CHECK(untwisted[1] == -E - q);

  Int sum_twisted = 0, sum_untwisted = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Int dt = degree_base(twisted[i], curve);
    const Int du = degree_base(untwisted[i], curve);
    CHECK(dt >= du);  // twisting by a point only raises degrees
    sum_twisted += dt;
    sum_untwisted += du;
  }
  CHECK(degree_base(twisted[0], curve) == 0);
  CHECK(degree_base(twisted[1], curve) == -17);
  CHECK(degree_base(twisted[2], curve) == -35);
  CHECK(degree_base(untwisted[1], curve) == -18);
  CHECK(sum_twisted == -52);    // det of the twisted pushforward
  CHECK(sum_untwisted == -53);  // det of the untwisted pushforward

  CHECK_THROWS_AS(pushforward_summands(CoverData(curve, 2), true),
                  UnsupportedMultiplicity);
}

TEST_CASE("pushforward determinant degrees across e") {
  for (long e = 7; e <= 60; ++e) {
    const BaseCurve curve(3, e);
    const CoverData cover(curve, 3);
    for (const bool twisted : {true, false}) {
      Int sum = 0;
      for (const auto& b : pushforward_summands(cover, twisted))
        sum += degree_base(b, curve);
      CHECK(sum == (twisted ? -3 * e - 1 : -3 * e - 2));
    }
  }
}

TEST_CASE("twisted normal-bundle part degree") {
  const BaseCurve curve(3, 17);
  CHECK(twisted_normal_part_degree(curve, 3, 4) == 160);
  CHECK(twisted_normal_part_degree(curve, 0, 0) == 0);
  // nonspeciality at (3, 17): 160 > 2g - 2 = 118
  const Int g = binomial(Int(3), 2) * 17 + 3 * 3;
  CHECK(twisted_normal_part_degree(curve, 3, 4) > 2 * g - 2);
  CHECK(CurveLineBundleDegree{3, 4}.total_degree(52) == 160);
}
