#pragma once

#include "sheetsim/coupling_field.hpp"
#include "sheetsim/random_stream.hpp"

#include <vector>

namespace sheetsim {

/// min(s1,t1) min(s2,t2); both points must lie in the unit square.
double sheet_covariance(GridPoint s, GridPoint t);

/// Brownian sheet values on a grid, row-major by (t1 index, t2 index).
struct SheetSample {
  GridSpec grid = GridSpec::default_grid();
  std::vector<double> values;

  double at(std::size_t i1, std::size_t i2) const { return values.at(grid.flat(i1, i2)); }
};

/// Independent N(0, cell area) increments, cumulated in both directions.
/// The lower boundary is exactly zero.
SheetSample sample_sheet(const GridSpec& grid, Stream& stream);

}  // namespace sheetsim
