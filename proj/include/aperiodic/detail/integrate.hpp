#pragma once

#include <algorithm>
#include <cmath>

#include "aperiodic/error.hpp"

namespace aperiodic {

namespace detail {

// Position of x in grid units, snapped onto the domain when it falls
// outside by less than a rounding error.
inline double grid_coordinate(const Grid& grid, double x) {
  const double u = (x - grid.start) / grid.step;
  const double last = static_cast<double>(grid.count - 1);
  constexpr double kSnap = 1e-9;
  if (u < 0.0 && u > -kSnap) return 0.0;
  if (u > last && u < last + kSnap) return last;
  return u;
}

}  // namespace detail

template <class T, class F>
T integrate_nodes(const Grid& grid, Interval range, F&& integrand) {
  if (grid.count < 2) {
    if (range.length() == 0.0 && grid.count == 1 && range.lo == grid.start) return T{};
    throw InputError("integration range is not covered by the grid");
  }
  if (range.hi < range.lo) throw InputError("integration range is inverted");
  const double u_lo = detail::grid_coordinate(grid, range.lo);
  const double u_hi = detail::grid_coordinate(grid, range.hi);
  const double last = static_cast<double>(grid.count - 1);
  if (!(u_lo >= 0.0 && u_hi <= last)) {
    throw InputError("integration range is not covered by the grid");
  }
  const double h = grid.step;
  // Integral over the fraction [a, b] of cell i of the linear interpolant.
  auto cell = [&](std::size_t i, double a, double b) -> T {
    const T g0 = integrand(i);
    const T g1 = integrand(i + 1);
    return h * ((b - a) * g0 + 0.5 * (b * b - a * a) * (g1 - g0));
  };
  auto i0 = static_cast<std::size_t>(std::floor(u_lo));
  auto i1 = static_cast<std::size_t>(std::floor(u_hi));
  i0 = std::min(i0, grid.count - 2);
  i1 = std::min(i1, grid.count - 2);
  if (i0 == i1) return cell(i0, u_lo - static_cast<double>(i0), u_hi - static_cast<double>(i0));

  T total = cell(i0, u_lo - static_cast<double>(i0), 1.0);
  T inner{};
  T previous = integrand(i0 + 1);
  for (std::size_t i = i0 + 1; i < i1; ++i) {
    const T next = integrand(i + 1);
    inner += previous + next;
    previous = next;
  }
  total += 0.5 * h * inner;
  total += cell(i1, 0.0, u_hi - static_cast<double>(i1));
  return total;
}

}  // namespace aperiodic
