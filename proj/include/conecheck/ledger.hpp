#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "conecheck/covers.hpp"
#include "conecheck/lattice.hpp"

namespace conecheck {

/// The numerical invariants of the degree-(me+1) curve on a cone over a
/// genus-gamma, degree-e base.
struct ConeCurveInvariants {
  Int gamma;
  Int e;
  Int m;

  Int d() const { return m * e + 1; }
  Int g() const { return binomial(m, 2) * e + m * gamma; }
  Int r() const { return e - gamma + 1; }

  bool main_theorem_valid() const {
    return m == 3 && gamma >= 3 && e >= 4 * gamma + 5;
  }
};

struct LedgerTerm {
  std::string label;
  Int value;
  std::string provenance;
  bool assumed = false;
};

/// Itemized dimension count; the total is always the exact sum of the terms.
struct DimensionLedger {
  std::vector<LedgerTerm> terms;

  Int total() const;
  nlohmann::json to_json() const;
};

/// lambda_{d,g,r} = (r+1)d - (r-3)(g-1).
Int expected_dimension(const Int& d, const Int& g, const Int& r);

/// The six-term family-dimension count; total r^2 + 7e + 4.
/// The linear-series term is recomputed through h0_surface, not hardcoded.
DimensionLedger family_dimension(const Int& gamma, const Int& e);

/// The tangent-space count; total r^2 + 7e + 5. The two normal-bundle twist
/// values are cited inputs and flagged as assumed.
DimensionLedger tangent_dimension(const Int& gamma, const Int& e);

/// Family total minus expected dimension.
Int superabundance(const Int& gamma, const Int& e);

/// The closed form (r-4)e + 2(r-5)(e-r) - 3.
Int superabundance_closed_form(const Int& gamma, const Int& e);

/// dim |m*Gamma0 + (mE+q)f| for arbitrary m >= 2, via h0_surface. Carries no
/// component claim for m != 3.
Int linear_series_dimension(const Int& gamma, const Int& e, const Int& m);

struct CheckResult {
  std::string name;
  bool pass;
  std::string lhs;
  std::string rhs;
  bool assumed = false;
};

struct VerificationReport {
  Int gamma, e, d, g, r;
  Int dim_family, dim_tangent, superabundance;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Runs the full battery of numerical checks at (gamma, e) with m = 3.
/// Throws HypothesisError outside gamma >= 3, e >= 4*gamma + 5.
VerificationReport verify_main_theorem(const Int& gamma, const Int& e,
                                       bool with_betti = false);

}  // namespace conecheck
