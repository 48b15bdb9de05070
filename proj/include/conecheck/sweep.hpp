#pragma once

#include <vector>

#include "conecheck/ledger.hpp"

namespace conecheck {

struct SweepCell {
  Int gamma;
  Int e;
};

struct SweepRow {
  Int gamma, e, d, g, r;
  Int dim, tangent, sigma;
  bool pass = false;
  bool skipped = false;  // cell outside the hypothesis range
};

/// The (gamma, e)-sorted cell list for a gamma range crossed with either an
/// absolute e range or an offset range from the bound 4*gamma + 5.
std::vector<SweepCell> make_grid(const Int& gamma_lo, const Int& gamma_hi,
                                 const Int& e_lo, const Int& e_hi,
                                 bool e_is_offset);

SweepRow evaluate_cell(const SweepCell& cell);

/// Serial reference path. Rows come back in cell order.
std::vector<SweepRow> run_sweep_serial(const std::vector<SweepCell>& cells);

/// OpenMP path over independent cells; output order is identical to the
/// serial reference regardless of scheduling.
std::vector<SweepRow> run_sweep_parallel(const std::vector<SweepCell>& cells);

}  // namespace conecheck
