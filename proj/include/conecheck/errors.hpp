#pragma once

#include <stdexcept>
#include <string>

namespace conecheck {

// Parity failure in the adjunction computation: (D^2 + D.K_S) is odd.
struct ParityError : std::domain_error {
  using std::domain_error::domain_error;
};

// h^0 requested in the special degree range [0, 2*genus-2] for a class the
// model cannot evaluate, while the policy is strict.
struct SpecialRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

// (d, g) inconsistent with any integer multiplicity m for the given (genus, e).
struct InvariantMismatch : std::domain_error {
  using std::domain_error::domain_error;
};

// Cover multiplicity outside the range an operation supports.
struct UnsupportedMultiplicity : std::domain_error {
  using std::domain_error::domain_error;
};

// Betti table shape disagrees with its ambient dimension, or a step is
// malformed.
struct ShapeError : std::domain_error {
  using std::domain_error::domain_error;
};

// (genus, e) outside the hypothesis range of the dimension ledgers.
struct HypothesisError : std::domain_error {
  using std::domain_error::domain_error;
};

// Nonspeciality guard failed: the twisted normal-bundle part has degree
// <= 2g-2, so Riemann-Roch alone does not give h^0.
struct NonspecialityError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace conecheck
