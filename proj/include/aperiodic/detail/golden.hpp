#pragma once

#include <cmath>
#include <utility>

namespace aperiodic::detail {

struct Minimum {
  double x;
  double value;
};

// Golden-section minimisation of fn on [a, b] until the bracket is shorter
// than tolerance. Returns the best point seen, which for a non-unimodal fn
// is a local minimum only.
template <class F>
Minimum golden_section_minimize(F&& fn, double a, double b, double tolerance) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  Minimum best = fc < fd ? Minimum{c, fc} : Minimum{d, fd};
  while (b - a > tolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = fn(c);
      if (fc < best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = fn(d);
      if (fd < best.value) best = {d, fd};
    }
  }
  return best;
}

}  // namespace aperiodic::detail
