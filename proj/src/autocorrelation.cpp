#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <unordered_map>

#include "aperiodic/diffraction.hpp"
#include "aperiodic/error.hpp"
#include "phase.hpp"

namespace aperiodic {

namespace {

struct Bin {
  std::uint64_t count = 0;
  double sum = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

void require_window(const PointSet& set, Interval range) {
  if (!set.window().contains(range)) {
    throw InputError("point set window does not contain the averaging window");
  }
}

}  // namespace

double Autocorrelation::at(double where) const {
  auto it = std::lower_bound(z.begin(), z.end(), where - bin_tolerance);
  if (it == z.end() || *it > where + bin_tolerance) return 0.0;
  return eta[static_cast<std::size_t>(it - z.begin())];
}

Autocorrelation autocorrelation(const PointSet& set, double n, double bin_tolerance,
                                double max_difference) {
  if (!(n > 0.0)) throw InputError("autocorrelation: n must be positive");
  if (!(bin_tolerance > 0.0)) throw InputError("autocorrelation: bin tolerance must be positive");
  if (!(max_difference > 0.0) || max_difference > 2.0 * n) {
    throw InputError("autocorrelation: max difference must lie in (0, 2n]");
  }
  require_window(set, {-n, n});
  const auto pts = set.slice({-n, n});

  // Positive differences only; the negative half is the mirror image.
  std::unordered_map<std::int64_t, Bin> bins;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = pts[j] - pts[i];
      if (d > max_difference) break;
      auto& b = bins[std::llround(d / bin_tolerance)];
      if (b.count == 0) {
        b.lo = d;
        b.hi = d;
      } else {
        b.lo = std::min(b.lo, d);
        b.hi = std::max(b.hi, d);
      }
      ++b.count;
      b.sum += d;
    }
  }

  std::vector<std::pair<std::int64_t, Bin>> sorted(bins.begin(), bins.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Bin> clusters;
  std::int64_t previous_key = 0;
  for (const auto& [key, bin] : sorted) {
    if (!clusters.empty() && key - previous_key <= 1) {
      Bin& c = clusters.back();
      c.count += bin.count;
      c.sum += bin.sum;
      c.lo = std::min(c.lo, bin.lo);
      c.hi = std::max(c.hi, bin.hi);
    } else {
      clusters.push_back(bin);
    }
    previous_key = key;
  }

  Autocorrelation out;
  out.half_width = n;
  out.bin_tolerance = bin_tolerance;
  out.max_difference = max_difference;
  out.point_count = pts.size();

  std::size_t wide = 0;
  std::size_t crowded = 0;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (clusters[k].hi - clusters[k].lo > 2.0 * bin_tolerance) ++wide;
    if (k > 0 && clusters[k].lo - clusters[k - 1].hi < 2.0 * bin_tolerance) ++crowded;
  }
  if (!clusters.empty() && clusters.front().lo < 2.0 * bin_tolerance) ++crowded;
  if (wide + crowded > 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "bins may merge distinct differences: %zu wide bins, %zu crowded "
                  "neighbours at bin tolerance %.3g",
                  wide, crowded, bin_tolerance);
    out.warnings.emplace_back(buf);
  }

  const double norm = 2.0 * n;
  const std::size_t m = clusters.size();
  out.z.resize(2 * m + 1);
  out.eta.resize(2 * m + 1);
  for (std::size_t k = 0; k < m; ++k) {
    const double zk = clusters[k].sum / static_cast<double>(clusters[k].count);
    const double ek = static_cast<double>(clusters[k].count) / norm;
    out.z[m + 1 + k] = zk;
    out.eta[m + 1 + k] = ek;
    out.z[m - 1 - k] = -zk;
    out.eta[m - 1 - k] = ek;
  }
  out.z[m] = 0.0;
  out.eta[m] = static_cast<double>(pts.size()) / norm;
  return out;
}

Complex amplitude(const PointSet& set, double y, double n) {
  return amplitude(set, y, n, 0.0);
}

Complex amplitude(const PointSet& set, double y, double n, double center) {
  if (!(n > 0.0)) throw InputError("amplitude: n must be positive");
  const Interval window{center - n, center + n};
  require_window(set, window);
  Complex sum{};
  for (double x : set.slice(window)) sum += detail::unit_phase(x, y);
  return sum / (2.0 * n);
}

double periodogram(const PointSet& set, double y, double n) {
  return 2.0 * n * std::norm(amplitude(set, y, n));
}

double pair_sum(const Autocorrelation& gamma, double y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < gamma.z.size(); ++i) {
    sum += gamma.eta[i] * detail::cos_phase(gamma.z[i], y);
  }
  return sum;
}

BraggEstimate bragg_intensity(const Autocorrelation& gamma, double y, double L,
                              BraggWindow window) {
  if (!(L > 0.0) || L > gamma.max_difference * (1.0 + 1e-12)) {
    throw InputError("bragg intensity: L must lie in (0, max difference]");
  }
  const double two_n = 2.0 * gamma.half_width;
  double sum = 0.0;
  const auto first = std::lower_bound(gamma.z.begin(), gamma.z.end(), -L);
  for (auto it = first; it != gamma.z.end() && *it <= L; ++it) {
    const auto i = static_cast<std::size_t>(it - gamma.z.begin());
    const double weight = 1.0 - std::abs(*it) / two_n;
    const double taper = window == BraggWindow::kFejer ? 1.0 - std::abs(*it) / L : 1.0;
    sum += taper * gamma.eta[i] / weight * detail::cos_phase(*it, y);
  }
  BraggEstimate out;
  // The triangle 1 - |z|/L has total mass L, the box 2L.
  out.raw = sum / (window == BraggWindow::kFejer ? L : 2.0 * L);
  out.intensity = std::max(0.0, out.raw);
  out.flagged = out.raw < -kNegativeIntensityTolerance;
  return out;
}

std::vector<CppRecord> cpp_check(const PointSet& set, std::span<const double> ys,
                                 double n, double L, BraggWindow window) {
  const Autocorrelation gamma = autocorrelation(set, n, kDefaultBinTolerance, L);
  std::vector<CppRecord> out;
  out.reserve(ys.size());
  for (double y : ys) {
    CppRecord r;
    r.y = y;
    const BraggEstimate b = bragg_intensity(gamma, y, L, window);
    r.intensity = b.intensity;
    r.intensity_raw = b.raw;
    r.amplitude_squared = std::norm(amplitude(set, y, n));
    r.discrepancy = std::abs(r.intensity - r.amplitude_squared);
    out.push_back(r);
  }
  return out;
}

}  // namespace aperiodic
