#pragma once

#include <vector>

#include <json.hpp>

#include "conecheck/lattice.hpp"
#include "conecheck/poly.hpp"

namespace conecheck {

/// Strand provenance of a resolution generator inside a transformed table.
/// `base` marks generators inherited from the base-curve resolution (the
/// quadric strand); `cone` marks the generators introduced by the transform.
enum class Strand { none, base, cone };

struct BettiEntry {
  Int degree;
  Strand strand = Strand::none;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Graded Betti table of a free resolution of an ideal sheaf: per homological
/// step, the multiset of twist degrees of its free summands. Steps are kept
/// sorted; trailing empty steps are trimmed at construction.
class BettiTable {
 public:
  BettiTable(Int ambient, std::vector<std::vector<Int>> step_degrees);
  BettiTable(Int ambient, std::vector<std::vector<BettiEntry>> steps);

  const Int& ambient() const { return ambient_; }
  std::size_t step_count() const { return steps_.size(); }
  const std::vector<std::vector<BettiEntry>>& steps() const { return steps_; }

  /// Degrees of step k (1-based), without strand tags.
  std::vector<Int> step_degrees(std::size_t k) const;

  bool has_strands() const;

  nlohmann::json to_json() const;
  static BettiTable from_json(const nlohmann::json& doc);

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  void validate() const;
  Int ambient_;
  std::vector<std::vector<BettiEntry>> steps_;
};

/// Resolution transform: from a table of the base curve in P^{r-1} to the
/// table of the degree-(me+1) cone curve in P^r. New generators carry the
/// `cone` strand tag, inherited ones `base`.
BettiTable cg_transform(const BettiTable& betti_y, const Int& m);

/// Euler-characteristic polynomial chi(t) of the resolved sheaf, computed as
/// an exact polynomial identity in t (no truncation at small t).
RationalPoly hilbert_polynomial(const BettiTable& table);

/// The table of the rational normal curve of degree e in P^e:
/// step i carries i*C(e, i+1) generators of degree i+1.
BettiTable rational_normal_betti(const Int& e);

/// Attempt to read a pure Betti table off the Hilbert-series numerator of a
/// projectively normal curve of genus gamma, degree e. Refuses via PurityError
/// when the sign pattern does not certify purity.
BettiTable pure_betti_from_hilbert(const BaseCurve& curve);

/// Thrown when the numerator's sign pattern does not certify a pure table.
struct PurityError : std::domain_error {
  RationalPoly numerator;
  explicit PurityError(std::string msg, RationalPoly num)
      : std::domain_error(std::move(msg)), numerator(std::move(num)) {}
};

/// True iff every step-2 degree in the base (quadric) strand is strictly less
/// than every step-1 degree in the cone strand, so the mixing block of the
/// presentation matrix vanishes for degree reasons. For transform outputs this
/// is max{base-strand step-2 degree} < m + 1.
bool degree_separation_check(const BettiTable& betti_x, const Int& m);

}  // namespace conecheck
