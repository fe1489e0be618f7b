#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "aperiodic/apfunctions.hpp"
#include "aperiodic/error.hpp"
#include "oracles.hpp"

using namespace aperiodic;

namespace {

const double kPhi = std::numbers::phi;
const double kTau = 2.0 * std::numbers::pi;

double max_abs_diff(const SampledFunction& a, const SampledFunction& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  return worst;
}

}  // namespace

TEST_CASE("eval_trig_poly") {
  const TrigPolynomial one({{Complex(1.0), 0.0}});
  CHECK(std::abs(eval_trig_poly(one, 12.345) - Complex(1.0)) < 1e-15);
  const TrigPolynomial cosine({{Complex(0.5), 1.0}, {Complex(0.5), -1.0}});
  CHECK(std::abs(eval_trig_poly(cosine, 0.0) - Complex(1.0)) < 1e-15);

  const Complex q = eval_trig_poly(quasiperiodic_polynomial(), 0.25);
  const double expected = std::cos(kTau * 0.25) + std::cos(kTau * std::sqrt(2.0) * 0.25);
  CHECK(q.real() == doctest::Approx(expected).epsilon(1e-13));
  CHECK(q.real() == doctest::Approx(-0.6057).epsilon(1e-4));
  CHECK(std::abs(q.imag()) < 1e-14);
}

TEST_CASE("TrigPolynomial merges equal frequencies") {
  const TrigPolynomial p({{Complex(1.0), 2.0}, {Complex(0.5), -1.0}, {Complex(2.0), 2.0 + 1e-13}});
  REQUIRE(p.terms().size() == 2);
  CHECK(p.terms()[0].frequency == -1.0);
  CHECK(p.terms()[1].coefficient.real() == doctest::Approx(3.0));
}

TEST_CASE("comb_convolve examples") {
  const TestFunction wide{TestFunctionKind::kTent, 0.0, 1.0, 1.0};
  const PointSet single({0.0}, {-5.0, 5.0});
  const SampledFunction at_zero = comb_convolve(single, wide, Grid{0.0, 0.01, 1});
  CHECK(at_zero.values()[0].real() == doctest::Approx(1.0));

  const TestFunction half{TestFunctionKind::kTent, 0.0, 0.5, 1.0};
  const SampledFunction saw = comb_convolve(integer_lattice(50), half, Grid::covering({-10.0, 10.0}, 0.01));
  CHECK(saw(0.25).real() == doctest::Approx(0.5).epsilon(1e-12));
  // 1-periodic: compare with the value one period later on the grid.
  for (std::size_t i = 0; i + 100 < saw.size(); i += 7) {
    CHECK(std::abs(saw.values()[i] - saw.values()[i + 100]) < 1e-12);
  }

  const PointSet fib = fibonacci_substitution_points(14);
  const SampledFunction nf = comb_convolve(fib, default_test_function(), Grid::covering({-500.0, 500.0}, 0.01));
  for (const Complex& v : nf.values()) {
    REQUIRE(v.real() >= 0.0);
    REQUIRE(v.real() <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(comb_convolve(single, wide, Grid::covering({-4.5, 0.0}, 0.01)), InputError);
}

TEST_CASE("comb_convolve is linear in the point set") {
  const PointSet fib = fibonacci_substitution_points(12);
  const PointSet left = restrict(fib, {fib.window().lo, -0.5});
  const PointSet right = restrict(fib, {-0.5, fib.window().hi});
  const Grid grid = Grid::covering({-200.0, 200.0}, 0.01);
  const TestFunction phi = default_test_function();
  const PointSet left_full(std::vector<double>(left.points().begin(), left.points().end()), fib.window());
  const PointSet right_full(std::vector<double>(right.points().begin(), right.points().end()), fib.window());
  const SampledFunction sum = comb_convolve(left_full, phi, grid) + comb_convolve(right_full, phi, grid);
  CHECK(max_abs_diff(sum, comb_convolve(fib, phi, grid)) <= 1e-12);
}

TEST_CASE("comb_convolve translation covariance") {
  const PointSet fib = fibonacci_substitution_points(12);
  const TestFunction phi = default_test_function();
  const Grid grid{-100.0, 0.01, 20001};
  const SampledFunction base = comb_convolve(fib, phi, grid);
  const double t = 3.0;  // 300 grid steps
  const SampledFunction moved = comb_convolve(translate(fib, t), phi, grid);
  double worst = 0.0;
  for (std::size_t i = 300; i < grid.count; ++i) {
    worst = std::max(worst, std::abs(moved.values()[i] - base.values()[i - 300]));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("fibonacci_triangle shape") {
  const PointSet ends = fibonacci_substitution_points(14);
  const auto pts = ends.points();
  for (std::size_t i = 0; i + 1 < pts.size(); i += 3) {
    const SampledFunction v = fibonacci_triangle(ends, Grid{pts[i], 0.01, 1});
    CHECK(v.values()[0].real() == 0.0);
    const double len = pts[i + 1] - pts[i];
    const SampledFunction mid = fibonacci_triangle(ends, Grid{pts[i] + 0.5 * len, 0.01, 1});
    CHECK(mid.values()[0].real() == doctest::Approx(len > 1.3 ? 1.0 : 0.5).epsilon(1e-9));
  }
  const SampledFunction f = fibonacci_triangle(ends, Grid::covering({-300.0, 300.0}, 0.01));
  for (const Complex& v : f.values()) {
    REQUIRE(v.real() >= 0.0);
    REQUIRE(v.real() <= 1.0);
  }
}

TEST_CASE("fibonacci_triangle mean equals the zeroth coefficient") {
  const PointSet ends = fibonacci_substitution_points(22);
  const double n = 1e4;
  const SampledFunction f = fibonacci_triangle(ends, Grid::covering({-n, n}, 0.01));
  // Oracle: exact triangle areas for whole tiles, Simpson on the two cut tiles.
  const auto pts = ends.points();
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i];
    const double b = pts[i + 1];
    if (b <= -n || a >= n) continue;
    const double h = (b - a) > 1.3 ? 1.0 : 0.5;
    if (a >= -n && b <= n) {
      area += 0.5 * h * (b - a);
    } else {
      auto tri = [&](double x) { return h * (1.0 - std::abs(2.0 * (x - a) / (b - a) - 1.0)); };
      area += oracle::simpson(tri, std::max(a, -n), std::min(b, n), 2000);
    }
  }
  const double mean = area / (2.0 * n);
  const Complex a0 = fourier_bohr_coefficient(f, 0.0, n);
  CHECK(std::abs(a0.real() - mean) <= 1e-3);
  CHECK(std::abs(a0.imag()) <= 1e-12);
}

TEST_CASE("fourier_bohr_coefficient examples") {
  const Grid g = Grid::covering({-1000.0, 1000.0}, 0.01);
  const auto wave = SampledFunction::tabulate(g, [](double x) { return std::polar(1.0, kTau * x); });
  CHECK(std::abs(fourier_bohr_coefficient(wave, 1.0, 100.0) - Complex(1.0)) <= 1e-3);
  const auto cosine = SampledFunction::tabulate(g, [](double x) { return std::cos(kTau * x); });
  CHECK(std::abs(fourier_bohr_coefficient(cosine, 0.0, 100.0)) <= 1e-3);
  const Complex half = fourier_bohr_coefficient(zoo_quasiperiodic(g), std::sqrt(2.0), 1000.0);
  CHECK(std::abs(half - Complex(0.5)) <= 1e-2);
  CHECK_THROWS_AS(fourier_bohr_coefficient(cosine, 0.0, 2000.0), InputError);
}

TEST_CASE("Fourier-Bohr coefficients of a trig polynomial converge like C/T") {
  const TrigPolynomial p({{Complex(0.7, -0.2), 0.3},
                          {Complex(-0.4, 0.1), std::sqrt(3.0)},
                          {Complex(0.25), -1.1},
                          {Complex(0.1, 0.6), 2.0 * std::sqrt(2.0)}});
  const Grid g = Grid::covering({-1e4, 1e4}, 0.01);
  const SampledFunction f = tabulate(p, g);
  for (const TrigTerm& target : p.terms()) {
    // |(1/2T) int exp(2 pi i d x)| <= 1/(2 pi |d| T) for every other term.
    double c = 0.0;
    for (const TrigTerm& other : p.terms()) {
      if (&other == &target) continue;
      c += std::abs(other.coefficient) / (kTau * std::abs(other.frequency - target.frequency));
    }
    for (double T : {1e2, 1e3, 1e4}) {
      const double err = std::abs(fourier_bohr_coefficient(f, target.frequency, T) - target.coefficient);
      CHECK(err <= 1.05 * c / T + 1e-9);
    }
  }
}

TEST_CASE("zoo functions") {
  const Grid g = Grid::covering({-50.0, 50.0}, 0.01);
  CHECK(zoo_quasiperiodic(Grid{0.0, 0.01, 1}).values()[0].real() == doctest::Approx(2.0));
  CHECK(zoo_limit_periodic(Grid{0.0, 0.01, 1}).values()[0].real() == 0.0);

  double expected = 0.0;
  for (int n = 1; n <= 20; ++n) expected += std::sin(kTau / std::pow(2.0, n)) / (n * n);
  CHECK(zoo_limit_periodic(Grid{1.0, 0.01, 1}, 20).values()[0].real() == doctest::Approx(expected).epsilon(1e-14));

  for (int terms : {5, 30}) {
    CHECK(max_abs_diff(zoo_limit_periodic(g, terms), zoo_limit_periodic(g, terms + 10)) <=
          limit_periodic_tail_bound(terms));
    CHECK(max_abs_diff(zoo_limit_quasiperiodic(g, terms), zoo_limit_quasiperiodic(g, terms + 10)) <=
          limit_quasiperiodic_tail_bound(terms));
  }
  CHECK(limit_periodic_tail_bound(30) < 1.0 / 29.0);
  CHECK(limit_quasiperiodic_tail_bound(30) < 2.0 / (29.0 * 29.0));
  CHECK_THROWS_AS(zoo_limit_periodic(g, 0), InputError);
}

TEST_CASE("fourier_transform of test functions") {
  const double w = 0.4;
  const double h = 1.5;
  const TestFunction tent{TestFunctionKind::kTent, 0.0, w, h};
  CHECK(fourier_transform(tent, 0.0).real() == doctest::Approx(h * w));
  CHECK(std::abs(fourier_transform(tent, 1.0 / w)) < 1e-15);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pick(-6.0, 6.0);
  for (TestFunctionKind kind : {TestFunctionKind::kTent, TestFunctionKind::kRaisedCosine}) {
    for (double c : {0.0, 0.3}) {
      const TestFunction phi{kind, c, w, h};
      for (int k = 0; k < 20; ++k) {
        const double y = pick(rng);
        // Simpson on each half of the support (kink at the center).
        auto re = [&](double x) { return phi(x) * std::cos(kTau * x * y); };
        auto im = [&](double x) { return -phi(x) * std::sin(kTau * x * y); };
        const double r = oracle::simpson(re, c - w, c, 4000) + oracle::simpson(re, c, c + w, 4000);
        const double i = oracle::simpson(im, c - w, c, 4000) + oracle::simpson(im, c, c + w, 4000);
        const Complex got = fourier_transform(phi, y);
        CHECK(std::abs(got - Complex(r, i)) <= 1e-10);
        if (c == 0.0) CHECK(std::abs(got.imag()) <= 1e-12);
      }
    }
  }
}

TEST_CASE("SampledFunction interpolation and arithmetic") {
  const SampledFunction f(Grid{0.0, 0.5, 3}, {Complex(0.0), Complex(1.0), Complex(0.0, 2.0)});
  CHECK(std::abs(f(0.25) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(f(0.75) - Complex(0.5, 1.0)) < 1e-15);
  CHECK_THROWS_AS(f(1.5), InputError);
  CHECK_THROWS_AS(f - SampledFunction(Grid{0.0, 0.25, 3}, {Complex(0.0), Complex(0.0), Complex(0.0)}), InputError);
  CHECK_THROWS_AS(SampledFunction(Grid{0.0, 0.5, 2}, {Complex(0.0)}), InputError);
  CHECK_THROWS_AS((TestFunction{TestFunctionKind::kTent, 0.0, 0.0, 1.0}.validate()), InputError);
}
