// One PASS/FAIL line per acceptance criterion, followed by the measured
// numbers. Exit status is the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "aperiodic/apfunctions.hpp"
#include "aperiodic/diffraction.hpp"
#include "aperiodic/pointset.hpp"
#include "aperiodic/seminorms.hpp"
#include "oracles.hpp"

using namespace aperiodic;

namespace {

const double kPhi = std::numbers::phi;
const double kSqrt5 = std::sqrt(5.0);
const double kPi = std::numbers::pi;
const double kShift = 1.0 / (2.0 * std::numbers::sqrt2);

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  // Records a measured value and its bound; a false check fails the criterion.
  void check(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
  void note(const char* fmt, ...) __attribute__((format(printf, 2, 3)));
};

void Outcome::check(bool ok, const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  pass = pass && ok;
  lines.push_back(std::string(ok ? "ok   " : "MISS ") + buf);
}

void Outcome::note(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  lines.push_back(std::string("     ") + buf);
}

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.check(false, "threw: %s", e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0.0) out.check(secs < time_limit, "runtime %.2f s < %.0f s", secs, time_limit);
  std::printf("%s %2d  %s  (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, title, secs);
  for (const auto& l : out.lines) std::printf("          %s\n", l.c_str());
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

std::vector<double> to_vector(const PointSet& s) { return {s.points().begin(), s.points().end()}; }

double besicovitch(const SampledFunction& f, double n) { return seminorm_estimate(f, BesicovitchNorm{n}); }

// ---------------------------------------------------------------------------

void fibonacci_structure(Outcome& o) {
  const PointSet sub = fibonacci_substitution_points(15);
  const PointSet cps = model_set(CutProjectScheme::fibonacci(), sub.window());
  o.check(sub.size() >= 1000, "substitution points %zu >= 1000", sub.size());
  o.check(cps.size() == sub.size(), "cut-and-project points %zu", cps.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(sub.size(), cps.size()); ++i) {
    worst = std::max(worst, std::abs(sub[i] - cps[i]));
  }
  o.check(worst <= 1e-9, "max |substitution - cps| = %.3g <= 1e-9", worst);

  double gap_dev = 0.0;
  for (double g : gaps(sub)) gap_dev = std::max(gap_dev, std::min(std::abs(g - 1.0), std::abs(g - kPhi)));
  o.check(gap_dev <= 1e-12, "gap deviation from {1, phi} = %.3g <= 1e-12", gap_dev);

  const double n = 1e4;
  const PointSet big = fibonacci_substitution_points(20);
  const double density = static_cast<double>(big.count_in({-n, n})) / (2 * n);
  o.check(std::abs(density - kPhi / kSqrt5) <= 1e-3, "density at n = 1e4: %.6f (phi/sqrt5 = %.6f)",
          density, kPhi / kSqrt5);
  double far_dev = 0.0;
  for (double g : gaps(restrict(big, {-n, n}))) {
    far_dev = std::max(far_dev, std::min(std::abs(g - 1.0), std::abs(g - kPhi)));
  }
  o.note("gap deviation over [-1e4, 1e4]: %.3g (one ulp at 1e4 is %.3g)", far_dev,
         std::nextafter(1e4, 2e4) - 1e4);
}

void non_bohr(Outcome& o) {
  const Grid grid = Grid::covering({-400.0, 400.0}, 0.01);
  const SampledFunction f = fibonacci_triangle(fibonacci_substitution_points(14), grid);
  const AlmostPeriodReport r = scan_almost_periods(f, 0.3, SupNorm{}, {0.5, 100.0}, 0.01);
  o.check(r.periods.empty(), "sup almost periods at eps 0.3 in [0.5, 100]: %zu", r.periods.size());
  double best = 1e9;
  double best_t = 0.0;
  for (double t = 0.5; t <= 100.0; t += 0.01) {
    const double d = seminorm_of_difference(f, t, SupNorm{});
    if (d < best) best = d, best_t = t;
  }
  o.note("smallest sup difference %.4f at t = %.2f; %zu evaluations", best, best_t, r.evaluations);
}

void mean_ap(Outcome& o) {
  const PointSet set = fibonacci_substitution_points(18);
  const auto cands = fibonacci_return_candidates({0.0, 100.0}, 0.2);
  const AlmostPeriodReport r =
      mean_ap_certificate(set, default_test_function(), cands, 0.1, 1000.0, {0.0, 100.0});
  o.check(!r.periods.empty(), "accepted %zu of %zu candidates", r.periods.size(), cands.size());
  o.check(r.max_gap <= 10.0, "max_gap on [0, 100] = %.4f <= 10", r.max_gap);
}

void cpp_failure(Outcome& o) {
  const double n = 1e4;
  const PointSet set = shifted_halves(10000);
  const Autocorrelation g = autocorrelation(set, n, kDefaultBinTolerance, 50.0);
  double eta_dev = 0.0;
  for (int k = -50; k <= 50; ++k) eta_dev = std::max(eta_dev, std::abs(g.at(k) - 1.0));
  o.check(eta_dev <= 0.02, "max |eta(k) - 1| for |k| <= 50: %.4f", eta_dev);
  const auto pts = to_vector(set);
  for (int m = 1; m <= 3; ++m) {
    const double I = bragg_intensity(g, m, 50.0).intensity;
    const double a2 = std::norm(amplitude(set, m, n));
    const double oracle_a2 = static_cast<double>(std::norm(oracle::amplitude(pts, m, n)));
    o.check(std::abs(I - 1.0) <= 0.02, "I(%d) = %.5f", m, I);
    o.check(std::abs(a2 - oracle_a2) <= 1e-3, "|A_%d|^2 = %.5f, direct-sum oracle %.5f", m, a2, oracle_a2);
    if (m == 1) o.check(std::abs(I - a2) >= 0.3, "|I(1) - |A_1|^2| = %.4f >= 0.3", std::abs(I - a2));
  }
  o.note("closed form from the shift cos^2(pi s) = %.5f; printed form cos^2(pi sqrt2) = %.5f",
         std::pow(std::cos(kPi * kShift), 2), std::pow(std::cos(kPi * std::numbers::sqrt2), 2));
}

void digit_parity(Outcome& o) {
  std::vector<double> ns;
  for (int k = 4; k <= 8; ++k) {
    ns.push_back(std::pow(4.0, k));
    ns.push_back(2.0 * std::pow(4.0, k));
  }
  const std::int64_t reach = (1 << 18) + 100;
  const PointSet set = digit_parity_points(reach);
  const std::vector<double> origin{0.0};
  const StabilityReport r = amplitude_stability(set, 0.0, ns, origin);
  double lo = 1.0, hi = 0.0;
  for (const auto& row : r.amplitudes) {
    lo = std::min(lo, row[0].real());
    hi = std::max(hi, row[0].real());
  }
  o.check(r.spread_over_n >= 0.25, "A_0 spread over n = %.4f >= 0.25", r.spread_over_n);
  o.check(std::abs(lo - 1.0 / 3.0) <= 0.02 && std::abs(hi - 2.0 / 3.0) <= 0.02,
          "A_0 ranges over [%.4f, %.4f] (1/3, 2/3 within 0.02)", lo, hi);

  std::vector<double> ts;
  for (int t = 1; t <= 50; ++t) ts.push_back(t);
  const double n = std::pow(4.0, 9);
  const AlmostPeriodReport ap =
      mean_ap_certificate(set, default_test_function(), ts, 0.1, n, {0.0, 50.0}, 0.2);
  o.check(ap.periods.size() == ts.size(), "integer translates accepted at n = 4^9: %zu of %zu",
          ap.periods.size(), ts.size());
}

void squarefree(Outcome& o) {
  const std::int64_t N = 1000000;
  const PointSet set = squarefree_points(N);
  const double target = 6.0 / (kPi * kPi);
  const double density = static_cast<double>(set.count_in({0.5, static_cast<double>(N)})) / N;
  o.check(std::abs(density - target) <= 5e-4, "density %.6f (6/pi^2 = %.6f)", density, target);

  const double n = static_cast<double>(N);
  PeakScanOptions opt;
  opt.y_range = {0.0, 1.0};
  opt.threshold = 0.05;
  opt.n = n;
  opt.intensity_window = 100.0;
  const Spectrum s = peak_scan(set, opt);
  o.check(!s.peaks.empty() && std::abs(s.peaks.front().y) <= 1e-9, "peaks found: %zu", s.peaks.size());
  const double i0 = s.peaks.empty() ? 0.0 : s.peaks.front().intensity;
  o.check(std::abs(i0 - target * target) <= 0.005, "I(0) = %.5f ((6/pi^2)^2 = %.5f)", i0, target * target);
  double worst = 0.0;
  double worst_y = 0.0;
  for (const Peak& p : s.peaks) {
    const double d = std::abs(p.intensity - std::norm(p.amplitude));
    if (d > worst) worst = d, worst_y = p.y;
  }
  o.check(worst <= 0.02, "max CPP discrepancy %.5f at y = %.6f", worst, worst_y);
  std::string strongest;
  std::vector<Peak> by_size(s.peaks.begin(), s.peaks.end());
  std::sort(by_size.begin(), by_size.end(),
            [](const Peak& a, const Peak& b) { return std::abs(a.amplitude) > std::abs(b.amplitude); });
  for (std::size_t i = 0; i < std::min<std::size_t>(6, by_size.size()); ++i) {
    char buf[48];
    std::snprintf(buf, sizeof buf, " %.6f(%.4f)", by_size[i].y, by_size[i].intensity);
    strongest += buf;
  }
  o.note("strongest peaks y(I):%s", strongest.c_str());

  const double hn = 1e4;
  const auto hole = largest_hole(set, {-n + hn, n - hn});
  o.check(hole.has_value(), "widest gap %.0f at %.1f", hole ? hole->width : 0.0, hole ? hole->center : 0.0);
  if (!hole) return;
  const std::vector<double> ns{hn};
  const std::vector<double> centers{0.0, hole->center};
  const double spread = amplitude_stability(set, 0.0, ns, centers).spread_over_centers;
  const PointSet lattice = integer_lattice(N);
  const double base = amplitude_stability(lattice, 0.0, ns, centers).spread_over_centers;
  o.check(spread > base, "hole probe spread %.3g > lattice baseline %.3g (n = 1e4)", spread, base);
}

void seminorm_suite(Outcome& o) {
  const double n = 50.0;
  const Grid g = Grid::covering({-3.0 * n, n}, 0.01);
  const TestFunction bump{TestFunctionKind::kRaisedCosine, 5.0, 3.0, 2.0};
  std::vector<SampledFunction> battery;
  battery.push_back(SampledFunction::tabulate(g, [](double x) { return std::cos(2 * kPi * x); }));
  battery.push_back(zoo_quasiperiodic(g));
  battery.push_back(zoo_limit_periodic(g));
  battery.push_back(zoo_limit_quasiperiodic(g));
  battery.push_back(fibonacci_triangle(fibonacci_substitution_points(14), g));
  battery.push_back(comb_convolve(squarefree_points(400), default_test_function(), g));
  battery.push_back(comb_convolve(digit_parity_points(400), default_test_function(), g));
  battery.push_back(SampledFunction::tabulate(g, [&](double x) { return bump(x); }));
  battery.push_back(SampledFunction::tabulate(g, [](double x) { return std::polar(1.0, 2 * kPi * std::sqrt(3.0) * x); }));
  battery.push_back(SampledFunction::tabulate(g, [](double x) { return x > 0 ? 1.0 : 0.0; }));
  const WeylNorm weyl = WeylNorm::with_defaults(n);
  double slack = -1e300;
  for (const auto& f : battery) {
    const double b = besicovitch(f, n);
    const double w = seminorm_estimate(f, weyl);
    const double s = seminorm_estimate(f, SupNorm{});
    slack = std::max({slack, b - w, w - s});
  }
  o.check(slack <= 1e-9, "ordering B <= W <= sup on %zu functions, worst violation %.3g", battery.size(), slack);

  const double big = 1000.0;
  const SampledFunction c = SampledFunction::tabulate(Grid::covering({-big, big}, 0.01),
                                                      [](double x) { return std::cos(2 * kPi * x); });
  const double bc = besicovitch(c, big);
  o.check(std::abs(bc - 2.0 / kPi) <= 1e-3, "besicovitch(cos 2 pi x) = %.6f (2/pi = %.6f)", bc, 2.0 / kPi);
  const TestFunction tent = default_test_function();
  const SampledFunction t = SampledFunction::tabulate(Grid::covering({-big, big}, 0.01),
                                                      [&](double x) { return tent(x); });
  const double bt = besicovitch(t, big);
  o.check(bt <= 3e-4, "besicovitch(tent, n = 1e3) = %.3g <= 3e-4", bt);
}

struct ReconstructionRun {
  std::vector<double> mean_error;  // per K
  std::vector<double> sup_error;
  double norm = 0.0;
};

ReconstructionRun reconstruct(const PointSet& set, const Spectrum& spectrum, const TestFunction& phi,
                              bool by_weight, const std::vector<std::size_t>& ks) {
  const double n = 1000.0;
  const Grid grid = Grid::covering({-n, n}, 0.01);
  const SampledFunction comb = comb_convolve(set, phi, grid);
  ReconstructionRun run;
  run.norm = besicovitch(comb, n);
  for (std::size_t k : ks) {
    const Spectrum top = by_weight ? top_k_by_weight(spectrum, phi, k) : top_k_by_amplitude(spectrum, k);
    const Reconstruction r = fourier_bohr_reconstruction(set, phi, symmetrized(top), grid);
    const SampledFunction err = comb - r.function;
    run.mean_error.push_back(besicovitch(err, n));
    run.sup_error.push_back(seminorm_estimate(err, SupNorm{}));
  }
  return run;
}

void reconstruction(Outcome& o) {
  const PointSet set = fibonacci_substitution_points(20);
  const auto cands = fibonacci_frequency_candidates({0.0, 8.0}, 120);
  const Spectrum spectrum = spectrum_at(set, cands, 1e4, 100.0);
  const std::vector<std::size_t> ks{5, 20, 80};
  const TestFunction tent{TestFunctionKind::kTent, 0.0, 0.5, 1.0};

  auto describe = [&](const char* label, const ReconstructionRun& r) {
    o.note("%s: B error / ||N||_B = %.4f, %.4f, %.4f; sup error %.3f, %.3f, %.3f", label,
           r.mean_error[0] / r.norm, r.mean_error[1] / r.norm, r.mean_error[2] / r.norm, r.sup_error[0],
           r.sup_error[1], r.sup_error[2]);
  };
  const ReconstructionRun main = reconstruct(set, spectrum, tent, true, ks);
  o.note("Fibonacci chain, tent half width 1/2, top K by |A_y phi_hat(y)|, %zu candidate frequencies",
         cands.size());
  describe("K = 5, 20, 80", main);
  o.check(main.mean_error[0] > main.mean_error[1] && main.mean_error[1] > main.mean_error[2],
          "Besicovitch error strictly decreasing in K");
  o.check(main.mean_error[2] < 0.05 * main.norm, "K = 80: %.4f < 0.05 ||N||_B = %.4f", main.mean_error[2],
          0.05 * main.norm);
  o.note("sup / Besicovitch error at K = 80: %.1f", main.sup_error[2] / main.mean_error[2]);
  describe("diagnostic, same tent ranked by |A_y|", reconstruct(set, spectrum, tent, false, ks));
  describe("diagnostic, default tent (half width 0.4) ranked by weight",
           reconstruct(set, spectrum, default_test_function(), true, ks));

  const PointSet lattice = integer_lattice(2000);
  std::vector<double> ys;
  for (int k = -3; k <= 3; ++k) ys.push_back(k);
  const Spectrum ls = spectrum_at(lattice, ys, 1000.0, 50.0);
  const Grid grid = Grid::covering({-50.0, 50.0}, 0.01);
  const Reconstruction r = fourier_bohr_reconstruction(lattice, tent, ls, grid);
  const double err = seminorm_estimate(comb_convolve(lattice, tent, grid) - r.function, SupNorm{});
  double kept = 0.0;
  for (int k = -3; k <= 3; ++k) kept += fourier_transform(tent, k).real();
  const double tail = tent(0.0) - kept + kept / 2000.0;
  o.check(err <= tail, "lattice, peaks -3..3: sup error %.5f <= tail bound %.5f", err, tail);
}

void wiener(Outcome& o) {
  const double n = 400.0;
  std::vector<std::pair<const char*, PointSet>> sets{
      {"lattice", integer_lattice(500)},
      {"fibonacci", fibonacci_substitution_points(14)},
      {"cps", model_set(CutProjectScheme::fibonacci(), Interval{-500.0, 500.0})},
      {"squarefree", squarefree_points(500)},
      {"shifted halves", shifted_halves(500)},
      {"digit parity", digit_parity_points(500)}};
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ydist(-5.0, 5.0);
  for (const auto& [name, set] : sets) {
    const Autocorrelation g = autocorrelation(set, n, kDefaultBinTolerance, 2 * n);
    const double count = static_cast<double>(set.count_in({-n, n}));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double y = ydist(rng);
      worst = std::max(worst, std::abs(periodogram(set, y, n) - pair_sum(g, y)));
    }
    o.check(worst <= 1e-6 * count, "%-14s max |periodogram - pair sum| = %.3g <= %.3g", name, worst,
            1e-6 * count);
  }
}

void fourier_bohr(Outcome& o) {
  const double T = 1e3;
  const SampledFunction q = zoo_quasiperiodic(Grid::covering({-T, T}, 0.01));
  const Complex a = fourier_bohr_coefficient(q, std::sqrt(2.0), T);
  o.check(std::abs(a - Complex(0.5)) <= 1e-2, "A_sqrt2 of the quasiperiodic example at T = 1e3: %.6f%+.2gi",
          a.real(), a.imag());

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> freq(-3.0, 3.0);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<TrigPolynomial> polys{quasiperiodic_polynomial()};
  while (polys.size() < 6) {
    std::vector<TrigTerm> terms;
    const int count = 2 + static_cast<int>(rng() % 5);
    while (static_cast<int>(terms.size()) < count) {
      const double y = freq(rng);
      const bool spaced = std::all_of(terms.begin(), terms.end(),
                                      [&](const TrigTerm& t) { return std::abs(t.frequency - y) > 0.05; });
      if (spaced) terms.push_back({Complex(coef(rng), coef(rng)), y});
    }
    polys.emplace_back(terms);
  }
  const Grid grid = Grid::covering({-1e4, 1e4}, 0.01);
  double worst_ratio = 0.0;
  for (const TrigPolynomial& p : polys) {
    const SampledFunction f = tabulate(p, grid);
    for (const TrigTerm& target : p.terms()) {
      // |mean of exp(2 pi i d x) over [-T, T]| <= 1/(2 pi |d| T); 5% for quadrature.
      double c = 0.0;
      for (const TrigTerm& other : p.terms()) {
        if (&other != &target) c += std::abs(other.coefficient) / (2 * kPi * std::abs(other.frequency - target.frequency));
      }
      for (double t : {1e2, 1e3, 1e4}) {
        const double err = std::abs(fourier_bohr_coefficient(f, target.frequency, t) - target.coefficient);
        worst_ratio = std::max(worst_ratio, err / (1.05 * c / t + 1e-9));
      }
    }
  }
  o.check(worst_ratio <= 1.0, "%zu polynomials, worst error / (C/T) = %.3f <= 1", polys.size(), worst_ratio);
}

}  // namespace

int main() {
  criterion(1, "Fibonacci structure", 5.0, fibonacci_structure);
  criterion(2, "no sup almost periods of the Fibonacci triangle", 60.0, non_bohr);
  criterion(3, "mean almost periods from cut-and-project returns", 0.0, mean_ap);
  criterion(4, "shifted halves: Bragg intensity differs from |A|^2", 30.0, cpp_failure);
  criterion(5, "digit parity: no mean density, mean almost periodic", 0.0, digit_parity);
  criterion(6, "square-free integers", 120.0, squarefree);
  criterion(7, "seminorm suite", 0.0, seminorm_suite);
  criterion(8, "Fourier-Bohr reconstruction", 0.0, reconstruction);
  criterion(9, "periodogram equals pair sum", 0.0, wiener);
  criterion(10, "Fourier-Bohr coefficients", 0.0, fourier_bohr);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
