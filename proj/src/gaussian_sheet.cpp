#include "sheetsim/gaussian_sheet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sheetsim {

double sheet_covariance(GridPoint s, GridPoint t) {
  for (GridPoint p : {s, t})
    if (!(p.t1 >= 0.0 && p.t1 <= 1.0 && p.t2 >= 0.0 && p.t2 <= 1.0))
      throw std::invalid_argument("sheet_covariance: point outside the unit square");
  return std::min(s.t1, t.t1) * std::min(s.t2, t.t2);
}

SheetSample sample_sheet(const GridSpec& grid, Stream& stream) {
  const auto& u = grid.t1_values();
  const auto& v = grid.t2_values();
  SheetSample out{grid, std::vector<double>(grid.size(), 0.0)};
  for (std::size_t a = 1; a < u.size(); ++a) {
    for (std::size_t b = 1; b < v.size(); ++b) {
      const double area = (u[a] - u[a - 1]) * (v[b] - v[b - 1]);
      const double cell = std::sqrt(area) * stream.normal();
      out.values[grid.flat(a, b)] = cell + out.values[grid.flat(a - 1, b)] +
                                    out.values[grid.flat(a, b - 1)] -
                                    out.values[grid.flat(a - 1, b - 1)];
    }
  }
  return out;
}

}  // namespace sheetsim
