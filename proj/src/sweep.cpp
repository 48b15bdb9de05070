#include "conecheck/sweep.hpp"

namespace conecheck {

std::vector<SweepCell> make_grid(const Int& gamma_lo, const Int& gamma_hi,
                                 const Int& e_lo, const Int& e_hi,
                                 bool e_is_offset) {
  std::vector<SweepCell> cells;
  for (Int gamma = gamma_lo; gamma <= gamma_hi; ++gamma) {
    const Int base = e_is_offset ? 4 * gamma + 5 : Int(0);
    for (Int e = e_lo; e <= e_hi; ++e) cells.push_back({gamma, base + e});
  }
  return cells;
}

SweepRow evaluate_cell(const SweepCell& cell) {
  SweepRow row;
  row.gamma = cell.gamma;
  row.e = cell.e;
  const ConeCurveInvariants inv{cell.gamma, cell.e, 3};
  row.d = inv.d();
  row.g = inv.g();
  row.r = inv.r();
  if (!inv.main_theorem_valid()) {
    row.skipped = true;
    return row;
  }
  const VerificationReport report = verify_main_theorem(cell.gamma, cell.e);
  row.dim = report.dim_family;
  row.tangent = report.dim_tangent;
  row.sigma = report.superabundance;
  row.pass = report.all_pass();
  return row;
}

std::vector<SweepRow> run_sweep_serial(const std::vector<SweepCell>& cells) {
  std::vector<SweepRow> rows(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    rows[i] = evaluate_cell(cells[i]);
  return rows;
}

std::vector<SweepRow> run_sweep_parallel(const std::vector<SweepCell>& cells) {
  std::vector<SweepRow> rows(cells.size());
  const long n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)] =
        evaluate_cell(cells[static_cast<std::size_t>(i)]);
  return rows;
}

}  // namespace conecheck
