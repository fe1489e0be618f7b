#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "aperiodic/constants.hpp"
#include "aperiodic/detail/golden.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/parallel.hpp"
#include "aperiodic/seminorms.hpp"

namespace aperiodic {

namespace {

constexpr double kRefineTolerance = 1e-6;
constexpr double kDedupTolerance = 1e-9;

// max |f(x) - f(x - t)| over the overlap nodes, stopping as soon as the
// running maximum reaches cutoff.
double sup_difference(const SampledFunction& f, double t, double cutoff) {
  const Grid& g = f.grid();
  const auto values = f.values();
  const double lo = g.start + t;
  const double hi = g.last();
  if (lo > hi) throw InputError("translate leaves no overlap with the grid");
  const double first = std::ceil((lo - g.start) / g.step - 1e-9);
  double best = 0.0;
  for (auto i = static_cast<std::size_t>(std::max(0.0, first)); i < g.count; ++i) {
    const double x = g.at(i);
    double u = (x - t - g.start) / g.step;
    u = std::clamp(u, 0.0, static_cast<double>(g.count - 1));
    auto j = static_cast<std::size_t>(u);
    if (j + 1 >= g.count) j = g.count - 2;
    const double s = u - static_cast<double>(j);
    const Complex shifted = values[j] + s * (values[j + 1] - values[j]);
    best = std::max(best, std::abs(values[i] - shifted));
    if (best >= cutoff) break;
  }
  return best;
}

double difference_estimate(const SampledFunction& f, double t, const SeminormKind& kind,
                           double cutoff) {
  if (std::holds_alternative<SupNorm>(kind)) return sup_difference(f, t, cutoff);
  return seminorm_of_difference(f, t, kind);
}

void sort_unique(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  auto last = std::unique(values.begin(), values.end(), [](double a, double b) {
    return std::abs(a - b) <= kDedupTolerance;
  });
  values.erase(last, values.end());
}

std::string kind_note(const SeminormKind& kind) { return "kind: " + describe(kind); }

}  // namespace

AlmostPeriodReport scan_almost_periods(const SampledFunction& f, double epsilon,
                                       const SeminormKind& kind, Interval scan_range,
                                       double scan_step) {
  validate(kind);
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (!(scan_step > 0.0)) throw InputError("scan step must be positive");
  if (!(scan_range.lo <= scan_range.hi)) throw InputError("scan range is inverted");

  const auto steps =
      static_cast<std::size_t>(std::floor(scan_range.length() / scan_step + 1e-9)) + 1;
  std::vector<double> ts(steps);
  for (std::size_t j = 0; j < steps; ++j) {
    ts[j] = scan_range.lo + static_cast<double>(j) * scan_step;
  }
  std::vector<double> value(steps);
  parallel_for(steps, [&](std::size_t j) {
    value[j] = difference_estimate(f, ts[j], kind, epsilon);
  });

  AlmostPeriodReport report;
  report.epsilon = epsilon;
  report.kind = kind;
  report.scan_range = scan_range;
  report.scan_step = scan_step;
  report.evaluations = steps;

  std::vector<double> periods;
  std::size_t runs = 0;
  for (std::size_t j = 0; j < steps;) {
    if (!(value[j] < epsilon)) {
      ++j;
      continue;
    }
    std::size_t end = j;
    std::size_t best = j;
    while (end < steps && value[end] < epsilon) {
      periods.push_back(ts[end]);
      if (value[end] < value[best]) best = end;
      ++end;
    }
    ++runs;
    const double a = std::max(scan_range.lo, ts[best] - scan_step);
    const double b = std::min(scan_range.hi, ts[best] + scan_step);
    if (b > a) {
      std::size_t calls = 0;
      const auto refined = detail::golden_section_minimize(
          [&](double t) {
            ++calls;
            return difference_estimate(f, t, kind, kInfiniteGap);
          },
          a, b, kRefineTolerance);
      report.evaluations += calls;
      if (refined.value < epsilon) periods.push_back(refined.x);
    }
    j = end;
  }
  sort_unique(periods);
  report.periods = std::move(periods);
  report.max_gap = max_gap(report.periods, scan_range);
  report.notes.push_back(kind_note(kind));
  char buf[96];
  std::snprintf(buf, sizeof buf, "refined runs: %zu", runs);
  report.notes.emplace_back(buf);
  return report;
}

AlmostPeriodReport scan_candidate_periods(const SampledFunction& f, double epsilon,
                                          const SeminormKind& kind,
                                          std::span<const double> candidates,
                                          Interval scan_range) {
  validate(kind);
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  std::vector<double> inside;
  for (double t : candidates) {
    if (scan_range.contains(t)) inside.push_back(t);
  }
  sort_unique(inside);
  std::vector<double> value(inside.size());
  parallel_for(inside.size(), [&](std::size_t j) {
    value[j] = difference_estimate(f, inside[j], kind, epsilon);
  });

  AlmostPeriodReport report;
  report.epsilon = epsilon;
  report.kind = kind;
  report.scan_range = scan_range;
  report.scan_step = 0.0;
  report.evaluations = inside.size();
  for (std::size_t j = 0; j < inside.size(); ++j) {
    if (value[j] < epsilon) report.periods.push_back(inside[j]);
  }
  report.max_gap = max_gap(report.periods, scan_range);
  report.notes.push_back(kind_note(kind));
  char buf[96];
  std::snprintf(buf, sizeof buf, "candidates in range: %zu", inside.size());
  report.notes.emplace_back(buf);
  return report;
}

std::vector<double> fibonacci_return_candidates(Interval range, double internal_radius) {
  if (!(internal_radius > 0.0)) throw InputError("internal radius must be positive");
  // t - u = n sqrt5 for t = m + n phi and u = m + n phi'.
  const auto n_lo = static_cast<std::int64_t>(
      std::floor((range.lo - internal_radius) / kSqrt5)) - 1;
  const auto n_hi = static_cast<std::int64_t>(
      std::ceil((range.hi + internal_radius) / kSqrt5)) + 1;
  std::vector<double> out;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const double nd = static_cast<double>(n);
    const auto m_lo = static_cast<std::int64_t>(
        std::floor(-internal_radius - nd * kGoldenConjugate));
    const auto m_hi = static_cast<std::int64_t>(
        std::ceil(internal_radius - nd * kGoldenConjugate));
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      const double md = static_cast<double>(m);
      if (std::abs(md + nd * kGoldenConjugate) >= internal_radius) continue;
      const double t = md + nd * kGolden;
      if (range.contains(t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace aperiodic
