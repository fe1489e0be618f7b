#pragma once

#include <cmath>
#include <complex>

#include "aperiodic/constants.hpp"

namespace aperiodic::detail {

// exp(-2 pi i x y) with the phase reduced modulo 1 before the sine and
// cosine, which keeps full precision for large x y.
inline std::complex<double> unit_phase(double x, double y) {
  double v = x * y;
  v -= std::nearbyint(v);
  const double a = -kTwoPi * v;
  return {std::cos(a), std::sin(a)};
}

inline double cos_phase(double x, double y) {
  double v = x * y;
  v -= std::nearbyint(v);
  return std::cos(kTwoPi * v);
}

}  // namespace aperiodic::detail
