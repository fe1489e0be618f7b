#include <algorithm>
#include <cmath>

#include "aperiodic/constants.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/pointset.hpp"

namespace aperiodic {

namespace {
constexpr double kBoundaryTolerance = 1e-12;
}

CutProjectScheme CutProjectScheme::fibonacci(WindowClosure closure) {
  CutProjectScheme s;
  s.first = {1.0, 1.0};
  s.second = {kGolden, kGoldenConjugate};
  s.window = {-1.0, kGolden - 1.0};
  s.closure = closure;
  return s;
}

void CutProjectScheme::validate() const {
  const double scale = std::max({std::abs(first[0]), std::abs(first[1]),
                                 std::abs(second[0]), std::abs(second[1])});
  if (!(std::abs(determinant()) > 1e-12 * scale * scale)) {
    throw InputError("cut and project basis is degenerate");
  }
  if (!(window.lo <= window.hi)) {
    throw InputError("cut and project window is inverted");
  }
}

bool CutProjectScheme::accepts(double u) const {
  if (closure == WindowClosure::kClosedLow) {
    return u >= window.lo && u < window.hi - kBoundaryTolerance;
  }
  return u > window.lo + kBoundaryTolerance && u <= window.hi;
}

namespace {

PointSet collect(const CutProjectScheme& s, IntRange m_range, IntRange n_range,
                 Interval physical) {
  std::vector<double> points;
  if (s.window.length() <= 0.0 || m_range.empty() || n_range.empty()) {
    return PointSet({}, physical);
  }
  const double i1 = s.first[1];
  const double i2 = s.second[1];
  const double p1 = s.first[0];
  const double p2 = s.second[0];
  for (std::int64_t n = n_range.lo; n <= n_range.hi; ++n) {
    const double nd = static_cast<double>(n);
    // Candidate m from whichever component of the first vector is usable;
    // the internal constraint gives the short row.
    double lo, hi;
    if (i1 != 0.0) {
      lo = (s.window.lo - nd * i2) / i1;
      hi = (s.window.hi - nd * i2) / i1;
    } else {
      lo = (physical.lo - nd * p2) / p1;
      hi = (physical.hi - nd * p2) / p1;
    }
    if (lo > hi) std::swap(lo, hi);
    const auto m_lo = std::max<std::int64_t>(
        m_range.lo, static_cast<std::int64_t>(std::floor(lo)) - 1);
    const auto m_hi = std::min<std::int64_t>(
        m_range.hi, static_cast<std::int64_t>(std::ceil(hi)) + 1);
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      const double md = static_cast<double>(m);
      const double u = md * i1 + nd * i2;
      if (!s.accepts(u)) continue;
      // One rounding from extended precision, matching the tile walk.
      const auto x = static_cast<double>(static_cast<long double>(md) * p1 +
                                         static_cast<long double>(nd) * p2);
      if (physical.contains(x)) points.push_back(x);
    }
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end(), [](double a, double b) {
        return b - a <= kPointSeparation;
      }) != points.end()) {
    throw InputError("cut and project: physical projection is not injective");
  }
  return PointSet(std::move(points), physical);
}

}  // namespace

PointSet model_set(const CutProjectScheme& scheme, IntRange m_range,
                   IntRange n_range, Interval physical_window) {
  scheme.validate();
  return collect(scheme, m_range, n_range, physical_window);
}

PointSet model_set(const CutProjectScheme& scheme, Interval physical_window) {
  scheme.validate();
  // Pad the physical window, then map the corners of
  // physical x internal box through the inverse basis.
  const double margin = 2.0 * (std::abs(scheme.window.lo) +
                               std::abs(scheme.window.hi)) *
                        std::max(std::abs(scheme.second[1]), 1.0);
  const Interval padded{physical_window.lo - margin, physical_window.hi + margin};
  const double det = scheme.determinant();
  double m_lo = INFINITY, m_hi = -INFINITY, n_lo = INFINITY, n_hi = -INFINITY;
  for (double x : {padded.lo, padded.hi}) {
    for (double u : {scheme.window.lo, scheme.window.hi}) {
      const double m = (x * scheme.second[1] - u * scheme.second[0]) / det;
      const double n = (u * scheme.first[0] - x * scheme.first[1]) / det;
      m_lo = std::min(m_lo, m);
      m_hi = std::max(m_hi, m);
      n_lo = std::min(n_lo, n);
      n_hi = std::max(n_hi, n);
    }
  }
  const IntRange m_range{static_cast<std::int64_t>(std::floor(m_lo)) - 2,
                         static_cast<std::int64_t>(std::ceil(m_hi)) + 2};
  const IntRange n_range{static_cast<std::int64_t>(std::floor(n_lo)) - 2,
                         static_cast<std::int64_t>(std::ceil(n_hi)) + 2};
  return collect(scheme, m_range, n_range, physical_window);
}

}  // namespace aperiodic
