#include "aperiodic/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aperiodic/error.hpp"

namespace aperiodic {

PointSet::PointSet(std::vector<double> points, Interval window)
    : points_(std::move(points)), window_(window) {
  if (!(window_.lo <= window_.hi)) {
    throw InputError("point set window is inverted or not a number");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double x = points_[i];
    if (!window_.contains(x)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "point " << x << " lies outside the window [" << window_.lo << ", "
          << window_.hi << "]";
      throw InputError(msg.str());
    }
    if (i > 0 && !(x - points_[i - 1] > kPointSeparation)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "points are not strictly increasing near " << x;
      throw InputError(msg.str());
    }
  }
}

PointSet PointSet::from_unsorted(std::vector<double> points, Interval window) {
  std::sort(points.begin(), points.end());
  return PointSet(std::move(points), window);
}

std::span<const double> PointSet::slice(Interval range) const {
  const auto first = std::lower_bound(points_.begin(), points_.end(), range.lo);
  const auto last = std::upper_bound(first, points_.end(), range.hi);
  return {first, last};
}

PointSet integer_lattice(std::int64_t n) {
  if (n < 0) throw InputError("integer_lattice: n must be nonnegative");
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(2 * n + 1));
  for (std::int64_t k = -n; k <= n; ++k) points.push_back(static_cast<double>(k));
  const auto half = static_cast<double>(n);
  return PointSet(std::move(points), {-half, half});
}

PointSet translate(const PointSet& set, double t) {
  std::vector<double> points(set.points().begin(), set.points().end());
  for (double& x : points) x += t;
  return PointSet(std::move(points), set.window().shifted(t));
}

PointSet restrict(const PointSet& set, Interval range) {
  const Interval window{std::max(range.lo, set.window().lo),
                        std::min(range.hi, set.window().hi)};
  if (window.hi < window.lo) return PointSet({}, {range.lo, range.lo});
  const auto inside = set.slice(window);
  return PointSet({inside.begin(), inside.end()}, window);
}

PointSet unite(const PointSet& a, const PointSet& b) {
  std::vector<double> points;
  points.reserve(a.size() + b.size());
  std::merge(a.points().begin(), a.points().end(), b.points().begin(),
             b.points().end(), std::back_inserter(points));
  const Interval window{std::min(a.window().lo, b.window().lo),
                        std::max(a.window().hi, b.window().hi)};
  return PointSet(std::move(points), window);
}

std::vector<double> gaps(const PointSet& set) {
  std::vector<double> out;
  const auto pts = set.points();
  if (pts.size() < 2) return out;
  out.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) out.push_back(pts[i] - pts[i - 1]);
  return out;
}

}  // namespace aperiodic
