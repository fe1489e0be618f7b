#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aperiodic/interval.hpp"

namespace aperiodic {

// Minimal separation between consecutive points of a PointSet.
inline constexpr double kPointSeparation = 1e-12;

// A finite, strictly increasing configuration of reals inside a closed
// window. Stands in for the intersection of an infinite point set with a
// finite averaging interval.
class PointSet {
 public:
  PointSet() = default;

  // Points must be strictly increasing (gaps > kPointSeparation) and lie in
  // the window; throws InputError otherwise.
  PointSet(std::vector<double> points, Interval window);

  // Sorts first, then validates as above.
  static PointSet from_unsorted(std::vector<double> points, Interval window);

  std::span<const double> points() const { return points_; }
  const Interval& window() const { return window_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  double operator[](std::size_t i) const { return points_[i]; }

  // Points inside the closed interval, as a contiguous view.
  std::span<const double> slice(Interval range) const;
  std::size_t count_in(Interval range) const { return slice(range).size(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<double> points_;
  Interval window_{};
};

PointSet integer_lattice(std::int64_t n);

// Shifts every point and the window by t.
PointSet translate(const PointSet& set, double t);

// Keeps the points inside range; the new window is range clipped to the
// old window.
PointSet restrict(const PointSet& set, Interval range);

// Union of two point sets with disjoint supports; window is the hull.
PointSet unite(const PointSet& a, const PointSet& b);

std::vector<double> gaps(const PointSet& set);

// ---------------------------------------------------------------------------
// Substitution tilings

// Letters are single ASCII characters; the Fibonacci rule uses 'l' for the
// long tile and 's' for the short tile.
using Word = std::string;

class SubstitutionRule {
 public:
  // Every letter occurring in an image must have an image of its own, and
  // every letter must have a positive tile length.
  SubstitutionRule(std::map<char, Word> images, std::map<char, double> lengths);

  // l -> ls, s -> l with tile lengths phi and 1.
  static SubstitutionRule fibonacci();

  bool contains(char letter) const { return images_.contains(letter); }
  const Word& image(char letter) const;
  double length(char letter) const;
  std::vector<char> alphabet() const;

 private:
  std::map<char, Word> images_;
  std::map<char, double> lengths_;
};

Word substitute(std::string_view word, const SubstitutionRule& rule,
                unsigned iterations);

// Left end points of the tiles of word laid out from origin. The window
// runs from origin to the right end of the last tile.
PointSet word_to_points(std::string_view word, const SubstitutionRule& rule,
                        double origin);

// All tile end points of the patch w|w around 0, where w is the
// iterations-fold image of the seed letter l on each side of the cut. The
// left copy is read left to right and ends at 0, as in the printed words
// ls|ls, lsl|lsl, lsllsl|lsllsl ... Window is [-|w|, |w|].
PointSet fibonacci_substitution_points(unsigned iterations);

// ---------------------------------------------------------------------------
// Cut and project

enum class WindowClosure {
  kClosedLow,   // [lo, hi)
  kClosedHigh,  // (lo, hi]
};

// Lattice spanned by two vectors with a physical and an internal component,
// and an interval window in internal space.
struct CutProjectScheme {
  std::array<double, 2> first{1.0, 1.0};   // (physical, internal)
  std::array<double, 2> second{1.0, 0.0};  // (physical, internal)
  Interval window{};
  WindowClosure closure = WindowClosure::kClosedLow;

  // Lattice Z(1,1) + Z(phi, phi') with window [-1, phi - 1).
  static CutProjectScheme fibonacci(
      WindowClosure closure = WindowClosure::kClosedLow);

  double determinant() const {
    return first[0] * second[1] - second[0] * first[1];
  }
  // Throws InputError on a degenerate basis or an inverted window.
  void validate() const;
  // Membership of an internal coordinate; boundary hits within 1e-12 of the
  // open end are excluded.
  bool accepts(double internal) const;
};

// {m b1 + n b2 : m in m_range, n in n_range, internal part in the window}
// restricted to physical_window.
PointSet model_set(const CutProjectScheme& scheme, IntRange m_range,
                   IntRange n_range, Interval physical_window);

// Same with index ranges derived from the windows (over-enumerated and then
// filtered).
PointSet model_set(const CutProjectScheme& scheme, Interval physical_window);

// ---------------------------------------------------------------------------
// Arithmetic examples

// Square-free integers m with 0 < |m| <= n; window [-n, n].
PointSet squarefree_points(std::int64_t n);

// {-k : k = 0..n} together with {1/(2 sqrt 2) + k : k = 0..n}.
PointSet shifted_halves(std::int64_t n);

// Integers 0 < |m| <= n whose binary representation has an odd number of
// digits, i.e. 4^j <= |m| < 2 * 4^j for some j >= 0.
PointSet digit_parity_points(std::int64_t n);

}  // namespace aperiodic
