#include <doctest.h>

#include "conecheck/sweep.hpp"

using namespace conecheck;

TEST_CASE("grid construction") {
  const auto cells = make_grid(3, 4, 0, 2, true);
  REQUIRE(cells.size() == 6);
  CHECK(cells[0].gamma == 3);
  CHECK(cells[0].e == 17);
  CHECK(cells[2].e == 19);
  CHECK(cells[3].gamma == 4);
  CHECK(cells[3].e == 21);

  const auto abs_cells = make_grid(3, 3, 15, 18, false);
  REQUIRE(abs_cells.size() == 4);
  CHECK(abs_cells[0].e == 15);
}

TEST_CASE("cells outside the hypothesis are skipped") {
  const auto rows = run_sweep_serial(make_grid(3, 3, 15, 18, false));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].skipped);  // e = 15 < 17
  CHECK(rows[1].skipped);
  CHECK_FALSE(rows[2].skipped);
  CHECK(rows[2].pass);
  CHECK(rows[2].sigma == 224);
  CHECK(rows[3].pass);
}

TEST_CASE("parallel sweep matches the serial reference") {
  const auto cells = make_grid(3, 6, 0, 12, true);
  const auto serial = run_sweep_serial(cells);
  const auto parallel = run_sweep_parallel(cells);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].gamma == parallel[i].gamma);
    CHECK(serial[i].e == parallel[i].e);
    CHECK(serial[i].dim == parallel[i].dim);
    CHECK(serial[i].tangent == parallel[i].tangent);
    CHECK(serial[i].sigma == parallel[i].sigma);
    CHECK(serial[i].pass == parallel[i].pass);
    CHECK(serial[i].skipped == parallel[i].skipped);
  }
}

TEST_CASE("rows come back in (gamma, e)-sorted order") {
  const auto rows = run_sweep_parallel(make_grid(3, 5, 0, 5, true));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered = rows[i - 1].gamma < rows[i].gamma ||
                         (rows[i - 1].gamma == rows[i].gamma &&
                          rows[i - 1].e < rows[i].e);
    CHECK(ordered);
  }
}
