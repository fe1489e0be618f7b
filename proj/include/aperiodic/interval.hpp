#pragma once

#include <cstdint>

namespace aperiodic {

// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  double center() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  Interval shifted(double t) const { return {lo + t, hi + t}; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Closed integer range [lo, hi].
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return hi < lo; }
};

}  // namespace aperiodic
