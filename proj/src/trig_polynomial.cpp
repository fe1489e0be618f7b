#include <algorithm>
#include <cmath>

#include "aperiodic/apfunctions.hpp"
#include "aperiodic/constants.hpp"

namespace aperiodic {

namespace {
constexpr double kFrequencyMerge = 1e-12;
}

TrigPolynomial::TrigPolynomial(std::vector<TrigTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const TrigTerm& a, const TrigTerm& b) {
                     return a.frequency < b.frequency;
                   });
  for (const auto& term : terms) {
    if (!terms_.empty() &&
        std::abs(term.frequency - terms_.back().frequency) <= kFrequencyMerge) {
      terms_.back().coefficient += term.coefficient;
    } else {
      terms_.push_back(term);
    }
  }
}

Complex TrigPolynomial::operator()(double x) const {
  Complex sum{};
  for (const auto& t : terms_) sum += t.coefficient * std::polar(1.0, kTwoPi * t.frequency * x);
  return sum;
}

Complex eval_trig_poly(const TrigPolynomial& p, double x) { return p(x); }

SampledFunction tabulate(const TrigPolynomial& p, const Grid& grid) {
  return SampledFunction::tabulate(grid, [&](double x) { return p(x); });
}

TrigPolynomial quasiperiodic_polynomial() {
  const double r2 = std::sqrt(2.0);
  return TrigPolynomial({{0.5, -r2}, {0.5, -1.0}, {0.5, 1.0}, {0.5, r2}});
}

}  // namespace aperiodic
