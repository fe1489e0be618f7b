#include <cmath>

#include "aperiodic/apfunctions.hpp"
#include "aperiodic/constants.hpp"
#include "aperiodic/error.hpp"

namespace aperiodic {

namespace {

void require_terms(int terms) {
  if (terms < 1) throw InputError("series truncation needs at least one term");
}

}  // namespace

SampledFunction zoo_quasiperiodic(const Grid& grid) {
  const double r2 = std::sqrt(2.0);
  return SampledFunction::tabulate(grid, [r2](double x) {
    return std::cos(kTwoPi * x) + std::cos(kTwoPi * r2 * x);
  });
}

SampledFunction zoo_limit_periodic(const Grid& grid, int terms) {
  require_terms(terms);
  return SampledFunction::tabulate(grid, [terms](double x) {
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
      sum += std::sin(kTwoPi * std::ldexp(x, -n)) / (static_cast<double>(n) * n);
    }
    return sum;
  });
}

SampledFunction zoo_limit_quasiperiodic(const Grid& grid, int terms) {
  require_terms(terms);
  const double r5 = std::sqrt(5.0);
  return SampledFunction::tabulate(grid, [terms, r5](double x) {
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
      const double scaled = std::ldexp(x, -n);
      const double nd = static_cast<double>(n);
      sum += (std::sin(kTwoPi * scaled) + std::sin(kTwoPi * r5 * scaled)) / (nd * nd * nd);
    }
    return sum;
  });
}

double limit_periodic_tail_bound(int terms) {
  require_terms(terms);
  return 1.0 / terms;
}

double limit_quasiperiodic_tail_bound(int terms) {
  require_terms(terms);
  return 1.0 / (static_cast<double>(terms) * terms);
}

}  // namespace aperiodic
