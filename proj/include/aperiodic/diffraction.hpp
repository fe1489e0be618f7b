#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aperiodic/apfunctions.hpp"
#include "aperiodic/interval.hpp"
#include "aperiodic/pointset.hpp"
#include "aperiodic/seminorms.hpp"

namespace aperiodic {

inline constexpr double kDefaultBinTolerance = 1e-9;
inline constexpr double kDefaultMaxDifference = 50.0;
// Relative peak threshold, in units of the point density.
inline constexpr double kDefaultPeakThresholdFactor = 0.05;
// Raw Bragg estimates below -kNegativeIntensityTolerance are flagged.
inline constexpr double kNegativeIntensityTolerance = 0.02;

// Finite-sample autocorrelation coefficients eta(z) for the points of the
// set inside [-n, n]. Entries are sorted by z and symmetric about 0; each z
// is the mean of the pair differences merged into its bin.
struct Autocorrelation {
  double half_width = 0.0;
  double bin_tolerance = kDefaultBinTolerance;
  double max_difference = 0.0;
  std::size_t point_count = 0;
  std::vector<double> z;
  std::vector<double> eta;
  std::vector<std::string> warnings;

  // eta at the entry within bin_tolerance of z, or 0.
  double at(double z) const;
  // Pair counts are eta * 2n.
  double pair_count(std::size_t i) const { return eta[i] * 2.0 * half_width; }
};

// Ordered pairs (x, x') of points in [-n, n] binned by x - x' for
// |x - x'| <= max_difference, normalised by 2n.
Autocorrelation autocorrelation(const PointSet& set, double n,
                                double bin_tolerance = kDefaultBinTolerance,
                                double max_difference = kDefaultMaxDifference);

// (1/2n) sum over points in [-n, n] of exp(-2 pi i x y).
Complex amplitude(const PointSet& set, double y, double n);
// Same average over the translated window [center - n, center + n].
Complex amplitude(const PointSet& set, double y, double n, double center);

// (1/2n) |sum over points in [-n, n] of exp(-2 pi i x y)|^2.
double periodogram(const PointSet& set, double y, double n);
// sum_z eta(z) exp(-2 pi i z y), the pair-sum side of the periodogram.
double pair_sum(const Autocorrelation& gamma, double y);

struct BraggEstimate {
  double intensity = 0.0;  // raw clamped at 0
  double raw = 0.0;
  bool flagged = false;    // raw below -kNegativeIntensityTolerance
};

// Averaging weight over |z| <= L. The box average has Dirichlet-kernel
// sidelobes (down to about -0.22 next to a unit peak); the Fejer triangle
// has a nonnegative kernel.
enum class BraggWindow { kFejer, kRectangular };

// Real part of the weighted mean of eta(z) / (1 - |z|/2n) exp(-2 pi i z y)
// over |z| <= L: (1/2L) sum for the box, (1/L) sum (1 - |z|/L) for Fejer.
BraggEstimate bragg_intensity(const Autocorrelation& gamma, double y, double L,
                              BraggWindow window = BraggWindow::kFejer);

struct CppRecord {
  double y = 0.0;
  double intensity = 0.0;
  double intensity_raw = 0.0;
  double amplitude_squared = 0.0;
  double discrepancy = 0.0;
};

// I(y) from the autocorrelation with max difference L against |A_y|^2.
std::vector<CppRecord> cpp_check(const PointSet& set, std::span<const double> ys,
                                 double n, double L,
                                 BraggWindow window = BraggWindow::kFejer);

// ---------------------------------------------------------------------------

struct Peak {
  double y = 0.0;
  Complex amplitude;
  double intensity = 0.0;
  double intensity_raw = 0.0;
};

struct Spectrum {
  std::vector<Peak> peaks;  // sorted by y
  double half_width = 0.0;
  double intensity_window = 0.0;
  BraggWindow bragg_window = BraggWindow::kFejer;
  std::vector<std::string> notes;
};

struct PeakScanOptions {
  Interval y_range{0.0, 3.0};
  double y_step = 1e-3;
  double n = 1e4;
  // |A_y| cut; 0 selects kDefaultPeakThresholdFactor * density.
  double threshold = 0.0;
  // L of the Bragg estimator; 0 selects min(100, 2n).
  double intensity_window = 0.0;
  BraggWindow bragg_window = BraggWindow::kFejer;
  bool grid_scan = true;
  // Extra seed frequencies, evaluated at full n.
  std::vector<double> candidates;
  bool refine_candidates = true;
};

// Grid scan of |A_y| followed by refinement of each local maximum through a
// sequence of growing averaging windows, ending at n. Peaks with
// |A_y| >= threshold are kept, with their Bragg intensity attached.
Spectrum peak_scan(const PointSet& set, const PeakScanOptions& options);

// Amplitude and intensity at the given frequencies, without any search.
Spectrum spectrum_at(const PointSet& set, std::span<const double> ys, double n,
                     double intensity_window, BraggWindow window = BraggWindow::kFejer);

// Largest K peaks ranked by |A_y|, or by |A_y phi_hat(y)|; result sorted by y.
Spectrum top_k_by_amplitude(const Spectrum& spectrum, std::size_t k);
Spectrum top_k_by_weight(const Spectrum& spectrum, const TestFunction& phi,
                         std::size_t k);

// Adds -y with the conjugate amplitude for every peak at y > 0 that has no
// partner yet.
Spectrum symmetrized(const Spectrum& spectrum);

// (m + n phi)/sqrt5 for |m|, |n| <= max_index inside range, sorted.
std::vector<double> fibonacci_frequency_candidates(Interval range, int max_index);

// ---------------------------------------------------------------------------

struct StabilityReport {
  double y = 0.0;
  std::vector<double> n_sequence;
  std::vector<double> centers;
  // amplitudes[i][j]: window half width n_sequence[i], center centers[j].
  std::vector<std::vector<Complex>> amplitudes;
  // Largest |A - A'| along n for a fixed center, and along centers for a
  // fixed n.
  double spread_over_n = 0.0;
  double spread_over_centers = 0.0;
};

StabilityReport amplitude_stability(const PointSet& set, double y,
                                    std::span<const double> n_sequence,
                                    std::span<const double> centers);

// Midpoint of the widest gap between consecutive points inside range; the
// first one wins on ties.
struct Hole {
  double center = 0.0;
  double width = 0.0;
};
std::optional<Hole> largest_hole(const PointSet& set, Interval range);

// ---------------------------------------------------------------------------

struct Reconstruction {
  SampledFunction function;     // real part
  double imaginary_residue = 0.0;  // max |Im| over the grid
};

// sum over peaks of A_y phi_hat(y) exp(2 pi i y x) on the grid, which must
// lie in the safe window of the set for phi.
Reconstruction fourier_bohr_reconstruction(const PointSet& set, const TestFunction& phi,
                                           const Spectrum& peaks, const Grid& grid);

// Besicovitch(n) test of N_phi = set * phi on the explicit translate list.
// N_phi is tabulated with grid_step on the range needed by every candidate.
AlmostPeriodReport mean_ap_certificate(const PointSet& set, const TestFunction& phi,
                                       std::span<const double> t_candidates,
                                       double epsilon, double n, Interval scan_range,
                                       double grid_step = kDefaultGridStep);

}  // namespace aperiodic
