#include <algorithm>
#include <cmath>

#include "aperiodic/apfunctions.hpp"
#include "aperiodic/constants.hpp"
#include "aperiodic/error.hpp"

namespace aperiodic {

Grid Grid::covering(Interval range, double step) {
  if (!(step > 0.0)) throw InputError("grid step must be positive");
  if (!(range.lo <= range.hi)) throw InputError("grid range is inverted");
  const double cells = std::ceil(range.length() / step - 1e-9);
  return Grid{range.lo, step, static_cast<std::size_t>(std::max(cells, 0.0)) + 1};
}

SampledFunction::SampledFunction(Grid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (!(grid_.step > 0.0)) throw InputError("sampled function: step must be positive");
  if (values_.empty()) throw InputError("sampled function: no values");
  if (values_.size() != grid_.count) {
    throw InputError("sampled function: value count does not match grid");
  }
}

bool SampledFunction::covers(Interval range) const {
  const double u_lo = detail::grid_coordinate(grid_, range.lo);
  const double u_hi = detail::grid_coordinate(grid_, range.hi);
  return u_lo >= 0.0 && u_hi <= static_cast<double>(grid_.count - 1);
}

Complex SampledFunction::operator()(double x) const {
  const double u = detail::grid_coordinate(grid_, x);
  const double last = static_cast<double>(grid_.count - 1);
  if (!(u >= 0.0 && u <= last)) {
    throw InputError("sampled function evaluated outside its grid");
  }
  if (grid_.count == 1) return values_[0];
  auto i = static_cast<std::size_t>(std::floor(u));
  i = std::min(i, grid_.count - 2);
  const double s = u - static_cast<double>(i);
  return values_[i] + s * (values_[i + 1] - values_[i]);
}

namespace {

void require_same_grid(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid() == g.grid())) {
    throw InputError("sampled functions live on different grids");
  }
}

}  // namespace

SampledFunction operator+(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  std::vector<Complex> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.values()[i] + g.values()[i];
  return SampledFunction(f.grid(), std::move(v));
}

SampledFunction operator-(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  std::vector<Complex> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.values()[i] - g.values()[i];
  return SampledFunction(f.grid(), std::move(v));
}

SampledFunction operator*(Complex c, const SampledFunction& f) {
  std::vector<Complex> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f.values()[i];
  return SampledFunction(f.grid(), std::move(v));
}

SampledFunction comb_convolve(const PointSet& set, const TestFunction& phi,
                              const Grid& grid) {
  phi.validate();
  if (grid.count == 0) throw InputError("comb_convolve: empty grid");
  const double w = phi.half_width;
  const Interval safe{set.window().lo + phi.center + w,
                      set.window().hi + phi.center - w};
  constexpr double kSlack = 1e-9;
  if (grid.start < safe.lo - kSlack || grid.last() > safe.hi + kSlack) {
    throw InputError(
        "comb_convolve: grid exceeds the point window shrunk by the support of "
        "the test function");
  }
  std::vector<Complex> values(grid.count);
  const auto relevant =
      set.slice({grid.start - phi.center - w, grid.last() - phi.center + w});
  const double last = static_cast<double>(grid.count - 1);
  for (double p : relevant) {
    const double lo = (p + phi.center - w - grid.start) / grid.step;
    const double hi = (p + phi.center + w - grid.start) / grid.step;
    const double first = std::max(std::ceil(lo), 0.0);
    const double final = std::min(std::floor(hi), last);
    for (double u = first; u <= final; u += 1.0) {
      const auto i = static_cast<std::size_t>(u);
      values[i] += phi(grid.at(i) - p);
    }
  }
  return SampledFunction(grid, std::move(values));
}

SampledFunction fibonacci_triangle(const PointSet& tile_ends, const Grid& grid) {
  const auto ends = tile_ends.points();
  if (ends.size() < 2) throw InputError("fibonacci_triangle: need at least one tile");
  constexpr double kSlack = 1e-9;
  if (grid.start < ends.front() - kSlack || grid.last() > ends.back() + kSlack) {
    throw InputError("fibonacci_triangle: grid extends beyond the tiling");
  }
  constexpr double kLengthTolerance = 1e-6;
  std::vector<Complex> values(grid.count);
  std::size_t tile = 0;
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double x = grid.at(i);
    while (tile + 2 < ends.size() && ends[tile + 1] <= x) ++tile;
    const double a = ends[tile];
    const double len = ends[tile + 1] - a;
    double height;
    if (std::abs(len - kGolden) < kLengthTolerance) {
      height = 1.0;
    } else if (std::abs(len - 1.0) < kLengthTolerance) {
      height = 0.5;
    } else {
      throw InputError("fibonacci_triangle: tile length is neither 1 nor phi");
    }
    const double s = std::clamp((x - a) / len, 0.0, 1.0);
    values[i] = height * (1.0 - std::abs(2.0 * s - 1.0));
  }
  return SampledFunction(grid, std::move(values));
}

Complex fourier_bohr_coefficient(const SampledFunction& f, double k, double T) {
  if (!(T > 0.0)) throw InputError("fourier_bohr_coefficient: T must be positive");
  if (!f.covers({-T, T})) {
    throw InputError("fourier_bohr_coefficient: grid does not cover [-T, T]");
  }
  const Grid& g = f.grid();
  const auto values = f.values();
  const Complex integral = integrate_nodes<Complex>(g, {-T, T}, [&](std::size_t i) {
    return std::polar(1.0, -kTwoPi * k * g.at(i)) * values[i];
  });
  return integral / (2.0 * T);
}

}  // namespace aperiodic
