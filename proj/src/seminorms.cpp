#include "aperiodic/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "aperiodic/error.hpp"

namespace aperiodic {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double sup_estimate(const SampledFunction& f) {
  double best = 0.0;
  for (const Complex& v : f.values()) best = std::max(best, std::abs(v));
  return best;
}

double besicovitch_estimate(const SampledFunction& f, double n) {
  if (!f.covers({-n, n})) {
    throw InputError("besicovitch estimate: grid does not cover [-n, n]");
  }
  const auto values = f.values();
  const double integral = integrate_nodes<double>(
      f.grid(), {-n, n}, [&](std::size_t i) { return std::abs(values[i]); });
  return integral / (2.0 * n);
}

std::vector<double> translate_list(const WeylNorm& w) {
  std::vector<double> out;
  const double span = w.translates.length();
  const auto steps = static_cast<std::size_t>(std::floor(span / w.translate_step + 1e-9));
  out.reserve(steps + 1 + w.extra_translates.size());
  for (std::size_t j = 0; j <= steps; ++j) {
    out.push_back(w.translates.lo + static_cast<double>(j) * w.translate_step);
  }
  out.insert(out.end(), w.extra_translates.begin(), w.extra_translates.end());
  return out;
}

// Running integral of |f| from the first node, evaluated at any x in the
// domain by integrating the linear interpolant inside the last cell.
class AbsPrimitive {
 public:
  explicit AbsPrimitive(const SampledFunction& f) : grid_(f.grid()) {
    const auto values = f.values();
    magnitude_.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) magnitude_[i] = std::abs(values[i]);
    // Long prefix sums lose ~1e-11 in double; differences of them are what we return.
    prefix_.assign(values.size(), 0.0L);
    const long double half_step = 0.5L * grid_.step;
    for (std::size_t i = 1; i < values.size(); ++i) {
      prefix_[i] = prefix_[i - 1] + half_step * (static_cast<long double>(magnitude_[i - 1]) + magnitude_[i]);
    }
  }

  long double operator()(double x) const {
    const double u = detail::grid_coordinate(grid_, x);
    if (grid_.count < 2) return 0.0L;
    auto i = static_cast<std::size_t>(std::floor(u));
    i = std::min(i, grid_.count - 2);
    const double s = u - static_cast<double>(i);
    return prefix_[i] + static_cast<long double>(grid_.step) * (s * magnitude_[i] +
                                      0.5 * s * s * (magnitude_[i + 1] - magnitude_[i]));
  }

 private:
  Grid grid_;
  std::vector<double> magnitude_;
  std::vector<long double> prefix_;
};

double weyl_estimate(const SampledFunction& f, const WeylNorm& w) {
  const auto translates = translate_list(w);
  const auto [lo_it, hi_it] = std::minmax_element(translates.begin(), translates.end());
  const Interval needed{-w.n - *hi_it, w.n - *lo_it};
  if (!f.covers(needed)) {
    throw InputError("weyl estimate: grid does not cover every translated window");
  }
  const AbsPrimitive primitive(f);
  double best = 0.0;
  for (double t : translates) {
    const auto avg = static_cast<double>((primitive(w.n - t) - primitive(-w.n - t)) / (2.0L * w.n));
    best = std::max(best, avg);
  }
  return best;
}

}  // namespace

void validate(const SeminormKind& kind) {
  std::visit(Overloaded{
                 [](const SupNorm&) {},
                 [](const BesicovitchNorm& b) {
                   if (!(b.n > 0.0)) throw InputError("besicovitch: n must be positive");
                 },
                 [](const WeylNorm& w) {
                   if (!(w.n > 0.0)) throw InputError("weyl: n must be positive");
                   if (!(w.translate_step > 0.0)) {
                     throw InputError("weyl: translate step must be positive");
                   }
                   if (!(w.translates.lo <= w.translates.hi)) {
                     throw InputError("weyl: translate range is inverted");
                   }
                 },
             },
             kind);
}

std::string describe(const SeminormKind& kind) {
  char buf[160];
  std::visit(Overloaded{
                 [&](const SupNorm&) { std::snprintf(buf, sizeof buf, "sup"); },
                 [&](const BesicovitchNorm& b) {
                   std::snprintf(buf, sizeof buf, "besicovitch n=%.17g", b.n);
                 },
                 [&](const WeylNorm& w) {
                   std::snprintf(buf, sizeof buf,
                                 "weyl n=%.17g translate_step=%.17g translates=[%.17g,%.17g] "
                                 "extra_translates=%zu",
                                 w.n, w.translate_step, w.translates.lo, w.translates.hi,
                                 w.extra_translates.size());
                 },
             },
             kind);
  return buf;
}

double seminorm_estimate(const SampledFunction& f, const SeminormKind& kind) {
  validate(kind);
  return std::visit(Overloaded{
                        [&](const SupNorm&) { return sup_estimate(f); },
                        [&](const BesicovitchNorm& b) { return besicovitch_estimate(f, b.n); },
                        [&](const WeylNorm& w) { return weyl_estimate(f, w); },
                    },
                    kind);
}

SeminormDiagnostic seminorm_with_diagnostic(const SampledFunction& f,
                                            const SeminormKind& kind) {
  SeminormDiagnostic out;
  out.estimate = seminorm_estimate(f, kind);
  SeminormKind doubled = kind;
  std::visit(Overloaded{
                 [&](SupNorm&) {},
                 [&](BesicovitchNorm& b) {
                   out.n = b.n;
                   b.n *= 2.0;
                 },
                 [&](WeylNorm& w) {
                   out.n = w.n;
                   w.n *= 2.0;
                   w.translates = {2.0 * w.translates.lo, 2.0 * w.translates.hi};
                 },
             },
             doubled);
  try {
    out.estimate_doubled = seminorm_estimate(f, doubled);
  } catch (const InputError&) {
    out.estimate_doubled = std::nan("");
  }
  return out;
}

SampledFunction difference_with_translate(const SampledFunction& f, double t) {
  const Grid& g = f.grid();
  const auto values = f.values();
  const double shift = t / g.step;
  double whole = std::floor(shift);
  double frac = shift - whole;
  if (frac < 1e-9) {
    frac = 0.0;
  } else if (frac > 1.0 - 1e-9) {
    frac = 0.0;
    whole += 1.0;
  }
  // Node i pairs with u = i - shift = (i - whole - 1) + (1 - frac).
  const auto k = static_cast<std::int64_t>(whole);
  const std::int64_t last = static_cast<std::int64_t>(g.count) - 1;
  const std::int64_t extra = frac > 0.0 ? 1 : 0;
  const std::int64_t first_node = std::max<std::int64_t>(0, k + extra);
  const std::int64_t last_node = std::min<std::int64_t>(last, last + k);
  if (first_node > last_node) {
    throw InputError("translate leaves no overlap with the grid");
  }
  std::vector<Complex> diff(static_cast<std::size_t>(last_node - first_node + 1));
  const double s = frac > 0.0 ? 1.0 - frac : 0.0;
  for (std::int64_t i = first_node; i <= last_node; ++i) {
    const std::int64_t base = i - k - extra;
    Complex shifted = values[static_cast<std::size_t>(base)];
    if (s > 0.0) {
      shifted += s * (values[static_cast<std::size_t>(base + 1)] - shifted);
    }
    diff[static_cast<std::size_t>(i - first_node)] =
        values[static_cast<std::size_t>(i)] - shifted;
  }
  const Grid out{g.at(static_cast<std::size_t>(first_node)), g.step, diff.size()};
  return SampledFunction(out, std::move(diff));
}

double seminorm_of_difference(const SampledFunction& f, double t,
                              const SeminormKind& kind) {
  return seminorm_estimate(difference_with_translate(f, t), kind);
}

double max_gap(std::span<const double> sorted_points, Interval range) {
  double previous = range.lo;
  double widest = 0.0;
  bool any = false;
  for (double x : sorted_points) {
    if (!range.contains(x)) continue;
    widest = std::max(widest, x - previous);
    previous = x;
    any = true;
  }
  if (!any) return kInfiniteGap;
  return std::max(widest, range.hi - previous);
}

double approximation_error(const SampledFunction& f, const TrigPolynomial& p,
                           const SeminormKind& kind) {
  return seminorm_estimate(f - tabulate(p, f.grid()), kind);
}

}  // namespace aperiodic
