#include <algorithm>
#include <cmath>
#include <cstdio>

#include "aperiodic/diffraction.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/parallel.hpp"
#include "phase.hpp"

namespace aperiodic {

Reconstruction fourier_bohr_reconstruction(const PointSet& set, const TestFunction& phi,
                                           const Spectrum& peaks, const Grid& grid) {
  phi.validate();
  if (peaks.peaks.empty()) throw InputError("reconstruction needs at least one peak");
  const double w = phi.half_width;
  const Interval safe{set.window().lo + phi.center + w, set.window().hi + phi.center - w};
  if (grid.count == 0 || grid.start < safe.lo - 1e-9 || grid.last() > safe.hi + 1e-9) {
    throw InputError("reconstruction grid leaves the safe window of the point set");
  }

  struct Term {
    Complex weight;
    double y;
  };
  std::vector<Term> terms;
  terms.reserve(peaks.peaks.size());
  for (const Peak& p : peaks.peaks) terms.push_back({p.amplitude * fourier_transform(phi, p.y), p.y});

  std::vector<Complex> sum(grid.count);
  const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(grid.count, 64));
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t lo = grid.count * b / blocks;
    const std::size_t hi = grid.count * (b + 1) / blocks;
    for (std::size_t i = lo; i < hi; ++i) {
      const double x = grid.at(i);
      Complex s{};
      // exp(+2 pi i y x) is the conjugate of the analysis kernel.
      for (const Term& t : terms) s += t.weight * std::conj(detail::unit_phase(x, t.y));
      sum[i] = s;
    }
  });

  double residue = 0.0;
  std::vector<Complex> real_part(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    real_part[i] = sum[i].real();
    residue = std::max(residue, std::abs(sum[i].imag()));
  }
  Reconstruction out{SampledFunction(grid, std::move(real_part)), residue};
  return out;
}

AlmostPeriodReport mean_ap_certificate(const PointSet& set, const TestFunction& phi,
                                       std::span<const double> t_candidates,
                                       double epsilon, double n, Interval scan_range,
                                       double grid_step) {
  if (!(n > 0.0)) throw InputError("certificate: n must be positive");
  if (!(grid_step > 0.0)) throw InputError("certificate: grid step must be positive");
  double t_max = 0.0;
  double t_min = 0.0;
  for (double t : t_candidates) {
    if (!scan_range.contains(t)) continue;
    t_max = std::max(t_max, t);
    t_min = std::min(t_min, t);
  }
  // One extra step each side: an off-grid t interpolates between nodes, so
  // the overlap of f and its translate starts up to a step later.
  const Grid grid = Grid::covering({-n - t_max - grid_step, n - t_min + grid_step}, grid_step);
  const SampledFunction comb = comb_convolve(set, phi, grid);
  AlmostPeriodReport report =
      scan_candidate_periods(comb, epsilon, BesicovitchNorm{n}, t_candidates, scan_range);
  char buf[96];
  std::snprintf(buf, sizeof buf, "comb grid step: %.6g", grid_step);
  report.notes.emplace_back(buf);
  return report;
}

}  // namespace aperiodic
