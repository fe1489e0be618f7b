#include <algorithm>
#include <cmath>
#include <cstdio>

#include "aperiodic/constants.hpp"
#include "aperiodic/detail/golden.hpp"
#include "aperiodic/diffraction.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/parallel.hpp"

namespace aperiodic {

namespace {

constexpr double kStageGrowth = 8.0;
constexpr double kPruneFactor = 0.5;
constexpr int kStageSamples = 17;

struct Seed {
  double y;
  double magnitude;
  bool refined;
};

// Best of kStageSamples points over [y - h, y + h] clipped to range, then
// golden-section maximisation of |A| at half width n around it.
Seed refine(const PointSet& set, double y, double h, double n, Interval range) {
  auto magnitude = [&](double v) { return std::abs(amplitude(set, v, n)); };
  const double a = std::max(range.lo, y - h);
  const double b = std::min(range.hi, y + h);
  const double spacing = (b - a) / (kStageSamples - 1);
  double best_y = y;
  double best = magnitude(y);
  for (int k = 0; k < kStageSamples; ++k) {
    const double v = a + k * spacing;
    const double m = magnitude(v);
    if (m > best) {
      best = m;
      best_y = v;
    }
  }
  const double lo = std::max(range.lo, best_y - spacing);
  const double hi = std::min(range.hi, best_y + spacing);
  if (hi > lo) {
    const auto top = detail::golden_section_minimize(
        [&](double v) { return -magnitude(v); }, lo, hi, 1e-3 / n);
    if (-top.value > best) return {top.x, -top.value, true};
  }
  return {best_y, best, true};
}

void merge_close(std::vector<Seed>& seeds, double refined_tolerance) {
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.y < b.y; });
  std::vector<Seed> out;
  for (const Seed& s : seeds) {
    if (!out.empty()) {
      const double tol = (s.refined && out.back().refined) ? refined_tolerance : 1e-9;
      if (s.y - out.back().y <= tol) {
        if (s.magnitude > out.back().magnitude) out.back() = s;
        continue;
      }
    }
    out.push_back(s);
  }
  seeds = std::move(out);
}

double density_in(const PointSet& set, double n) {
  return static_cast<double>(set.count_in({-n, n})) / (2.0 * n);
}

void attach_intensities(const PointSet& set, Spectrum& spectrum) {
  const Autocorrelation gamma = autocorrelation(set, spectrum.half_width, kDefaultBinTolerance,
                                                spectrum.intensity_window);
  for (Peak& p : spectrum.peaks) {
    const BraggEstimate b = bragg_intensity(gamma, p.y, spectrum.intensity_window,
                                             spectrum.bragg_window);
    p.intensity = b.intensity;
    p.intensity_raw = b.raw;
  }
  spectrum.notes.insert(spectrum.notes.end(), gamma.warnings.begin(), gamma.warnings.end());
}

std::string format_note(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

}  // namespace

Spectrum peak_scan(const PointSet& set, const PeakScanOptions& options) {
  const double n = options.n;
  if (!(n > 0.0)) throw InputError("peak scan: n must be positive");
  if (!(options.y_step > 0.0)) throw InputError("peak scan: y step must be positive");
  if (!(options.y_range.lo <= options.y_range.hi)) {
    throw InputError("peak scan: frequency range is inverted");
  }
  if (options.threshold < 0.0) throw InputError("peak scan: threshold must be positive");
  if (!set.window().contains(Interval{-n, n})) {
    throw InputError("point set window does not contain the averaging window");
  }
  const double threshold =
      options.threshold > 0.0 ? options.threshold : kDefaultPeakThresholdFactor * density_in(set, n);
  const double L =
      options.intensity_window > 0.0 ? options.intensity_window : std::min(100.0, 2.0 * n);

  Spectrum spectrum;
  spectrum.half_width = n;
  spectrum.intensity_window = L;
  spectrum.bragg_window = options.bragg_window;
  spectrum.notes.push_back(format_note("threshold %.6g, intensity window %.6g", threshold, L));

  std::vector<Seed> seeds;
  if (options.grid_scan) {
    // Peaks at half width m are about 1/m wide; start where the grid
    // resolves them and grow the window towards n.
    double stage_n = std::min(n, 1.0 / (4.0 * options.y_step));
    const auto count = static_cast<std::size_t>(
        std::floor(options.y_range.length() / options.y_step + 1e-9)) + 1;
    std::vector<double> mag(count);
    parallel_for(count, [&](std::size_t j) {
      mag[j] = std::abs(amplitude(
          set, options.y_range.lo + static_cast<double>(j) * options.y_step, stage_n));
    });
    const double cut = stage_n < n ? kPruneFactor * threshold : threshold;
    for (std::size_t j = 0; j < count; ++j) {
      const bool left = j == 0 || mag[j] >= mag[j - 1];
      const bool right = j + 1 == count || mag[j] > mag[j + 1];
      if (left && right && mag[j] >= cut) {
        seeds.push_back({options.y_range.lo + static_cast<double>(j) * options.y_step, mag[j], true});
      }
    }
    // The first bracket is one grid step; later ones follow the width of
    // the previous stage.
    double h = options.y_step;
    int stages = 0;
    for (;;) {
      const double next = std::min(n, kStageGrowth * stage_n);
      std::vector<Seed> refined(seeds.size());
      parallel_for(seeds.size(), [&](std::size_t k) {
        refined[k] = refine(set, seeds[k].y, h, next, options.y_range);
      });
      const double stage_cut = next < n ? kPruneFactor * threshold : 0.0;
      seeds.clear();
      for (const Seed& s : refined) {
        if (s.magnitude >= stage_cut) seeds.push_back(s);
      }
      merge_close(seeds, 0.25 / next);
      ++stages;
      if (next >= n) break;
      h = 1.0 / (2.0 * next);
      stage_n = next;
    }
    spectrum.notes.push_back(format_note("grid scan stages %.0f, final half width %.6g",
                                         static_cast<double>(stages), n));
  }

  std::vector<double> extra;
  for (double c : options.candidates) {
    if (options.y_range.contains(c)) extra.push_back(c);
  }
  if (!extra.empty()) {
    std::vector<Seed> evaluated(extra.size());
    parallel_for(extra.size(), [&](std::size_t k) {
      if (options.refine_candidates) {
        evaluated[k] = refine(set, extra[k], 1.0 / (2.0 * n), n, options.y_range);
      } else {
        evaluated[k] = {extra[k], std::abs(amplitude(set, extra[k], n)), false};
      }
    });
    seeds.insert(seeds.end(), evaluated.begin(), evaluated.end());
    spectrum.notes.push_back(
        format_note("candidate frequencies %.0f", static_cast<double>(extra.size())));
  }
  merge_close(seeds, 0.25 / n);

  for (const Seed& s : seeds) {
    if (s.magnitude >= threshold) spectrum.peaks.push_back({s.y, amplitude(set, s.y, n), 0.0, 0.0});
  }
  attach_intensities(set, spectrum);
  return spectrum;
}

Spectrum spectrum_at(const PointSet& set, std::span<const double> ys, double n,
                     double intensity_window, BraggWindow window) {
  if (!(n > 0.0)) throw InputError("spectrum: n must be positive");
  std::vector<double> sorted(ys.begin(), ys.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](double a, double b) { return b - a <= 1e-9; }),
               sorted.end());
  Spectrum spectrum;
  spectrum.half_width = n;
  spectrum.intensity_window =
      intensity_window > 0.0 ? intensity_window : std::min(100.0, 2.0 * n);
  spectrum.bragg_window = window;
  spectrum.peaks.resize(sorted.size());
  parallel_for(sorted.size(), [&](std::size_t k) {
    spectrum.peaks[k] = {sorted[k], amplitude(set, sorted[k], n), 0.0, 0.0};
  });
  attach_intensities(set, spectrum);
  return spectrum;
}

namespace {

template <class Key>
Spectrum top_k(const Spectrum& spectrum, std::size_t k, Key&& key) {
  Spectrum out = spectrum;
  std::stable_sort(out.peaks.begin(), out.peaks.end(),
                   [&](const Peak& a, const Peak& b) { return key(a) > key(b); });
  if (out.peaks.size() > k) out.peaks.resize(k);
  std::sort(out.peaks.begin(), out.peaks.end(),
            [](const Peak& a, const Peak& b) { return a.y < b.y; });
  return out;
}

}  // namespace

Spectrum top_k_by_amplitude(const Spectrum& spectrum, std::size_t k) {
  return top_k(spectrum, k, [](const Peak& p) { return std::abs(p.amplitude); });
}

Spectrum top_k_by_weight(const Spectrum& spectrum, const TestFunction& phi, std::size_t k) {
  return top_k(spectrum, k, [&](const Peak& p) {
    return std::abs(p.amplitude * fourier_transform(phi, p.y));
  });
}

Spectrum symmetrized(const Spectrum& spectrum) {
  Spectrum out = spectrum;
  for (const Peak& p : spectrum.peaks) {
    if (p.y <= 1e-12) continue;
    const bool paired = std::any_of(spectrum.peaks.begin(), spectrum.peaks.end(),
                                    [&](const Peak& q) { return std::abs(q.y + p.y) <= 1e-9; });
    if (!paired) out.peaks.push_back({-p.y, std::conj(p.amplitude), p.intensity, p.intensity_raw});
  }
  std::sort(out.peaks.begin(), out.peaks.end(),
            [](const Peak& a, const Peak& b) { return a.y < b.y; });
  return out;
}

std::vector<double> fibonacci_frequency_candidates(Interval range, int max_index) {
  if (max_index < 0) throw InputError("candidate index bound must be nonnegative");
  std::vector<double> out;
  for (int n = -max_index; n <= max_index; ++n) {
    for (int m = -max_index; m <= max_index; ++m) {
      const double y = (m + n * kGolden) / kSqrt5;
      if (range.contains(y)) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return b - a <= 1e-12; }),
            out.end());
  return out;
}

StabilityReport amplitude_stability(const PointSet& set, double y,
                                    std::span<const double> n_sequence,
                                    std::span<const double> centers) {
  if (n_sequence.empty() || centers.empty()) {
    throw InputError("stability: need at least one n and one center");
  }
  StabilityReport report;
  report.y = y;
  report.n_sequence.assign(n_sequence.begin(), n_sequence.end());
  report.centers.assign(centers.begin(), centers.end());
  report.amplitudes.assign(n_sequence.size(), std::vector<Complex>(centers.size()));
  for (std::size_t i = 0; i < n_sequence.size(); ++i) {
    for (std::size_t j = 0; j < centers.size(); ++j) {
      report.amplitudes[i][j] = amplitude(set, y, n_sequence[i], centers[j]);
    }
  }
  for (std::size_t j = 0; j < centers.size(); ++j) {
    for (std::size_t a = 0; a < n_sequence.size(); ++a) {
      for (std::size_t b = a + 1; b < n_sequence.size(); ++b) {
        report.spread_over_n = std::max(
            report.spread_over_n, std::abs(report.amplitudes[a][j] - report.amplitudes[b][j]));
      }
    }
  }
  for (std::size_t i = 0; i < n_sequence.size(); ++i) {
    for (std::size_t a = 0; a < centers.size(); ++a) {
      for (std::size_t b = a + 1; b < centers.size(); ++b) {
        report.spread_over_centers =
            std::max(report.spread_over_centers,
                     std::abs(report.amplitudes[i][a] - report.amplitudes[i][b]));
      }
    }
  }
  return report;
}

std::optional<Hole> largest_hole(const PointSet& set, Interval range) {
  const auto pts = set.slice(range);
  if (pts.size() < 2) return std::nullopt;
  Hole best{0.5 * (pts[0] + pts[1]), pts[1] - pts[0]};
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const double w = pts[i] - pts[i - 1];
    if (w > best.width) best = {0.5 * (pts[i] + pts[i - 1]), w};
  }
  return best;
}

}  // namespace aperiodic
