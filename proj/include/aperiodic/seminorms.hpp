#pragma once

#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "aperiodic/apfunctions.hpp"
#include "aperiodic/interval.hpp"

namespace aperiodic {

// Supremum of |f| over the tabulated domain.
struct SupNorm {};

// (1/2n) integral_{-n}^{n} |f|.
struct BesicovitchNorm {
  double n = 1000.0;
};

// max over translates t of (1/2n) integral_{-n}^{n} |f(x - t)| dx, with t
// running over a grid on [translates.lo, translates.hi] plus any extra
// candidates.
struct WeylNorm {
  double n = 1000.0;
  double translate_step = 0.1;
  Interval translates{0.0, 2000.0};
  std::vector<double> extra_translates;

  // Translate grid step 0.1 over [0, 2n].
  static WeylNorm with_defaults(double n) { return {n, 0.1, {0.0, 2.0 * n}, {}}; }
};

using SeminormKind = std::variant<SupNorm, BesicovitchNorm, WeylNorm>;

void validate(const SeminormKind& kind);
std::string describe(const SeminormKind& kind);

// Finite-n estimator of the chosen seminorm. Throws InputError when the grid
// does not cover every averaging window.
double seminorm_estimate(const SampledFunction& f, const SeminormKind& kind);

// Estimates at the stated n and at 2n, so users can see how far the finite
// average has settled. The sup kind reports the same value twice.
struct SeminormDiagnostic {
  double n = 0.0;
  double estimate = 0.0;
  double estimate_doubled = 0.0;
};
SeminormDiagnostic seminorm_with_diagnostic(const SampledFunction& f,
                                            const SeminormKind& kind);

// f(x) - f(x - t) on the nodes of f where both values are available.
SampledFunction difference_with_translate(const SampledFunction& f, double t);

// Estimator of || f - tau_t f || where tau_t f(x) = f(x - t).
double seminorm_of_difference(const SampledFunction& f, double t,
                              const SeminormKind& kind);

inline constexpr double kInfiniteGap = std::numeric_limits<double>::infinity();

// Largest distance between consecutive elements of points together with the
// two ends of range; infinite when no point lies in range.
double max_gap(std::span<const double> sorted_points, Interval range);

struct AlmostPeriodReport {
  double epsilon = 0.0;
  SeminormKind kind;
  std::vector<double> periods;
  Interval scan_range{};
  double scan_step = 0.0;  // 0 when an explicit candidate list was scanned
  double max_gap = kInfiniteGap;
  std::size_t evaluations = 0;
  std::vector<std::string> notes;
};

// Exhaustive scan over scan_range with the given step. Every grid point
// with estimate < epsilon is reported, and each run of such points is
// refined once by golden-section minimisation around its best point.
AlmostPeriodReport scan_almost_periods(const SampledFunction& f, double epsilon,
                                       const SeminormKind& kind, Interval scan_range,
                                       double scan_step);

// Same test on an explicit list of translates, without refinement.
AlmostPeriodReport scan_candidate_periods(const SampledFunction& f, double epsilon,
                                          const SeminormKind& kind,
                                          std::span<const double> candidates,
                                          Interval scan_range);

// m + n phi for all integers with |m + n phi'| < internal_radius and
// m + n phi in range, sorted.
std::vector<double> fibonacci_return_candidates(Interval range, double internal_radius);

// Seminorm of f - P, with P tabulated on the grid of f.
double approximation_error(const SampledFunction& f, const TrigPolynomial& p,
                           const SeminormKind& kind);

}  // namespace aperiodic
