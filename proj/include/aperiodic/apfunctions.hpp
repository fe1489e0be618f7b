#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "aperiodic/interval.hpp"
#include "aperiodic/pointset.hpp"

namespace aperiodic {

using Complex = std::complex<double>;

// Default sampling step; narrow enough to resolve a unit-width tent with
// 100 samples.
inline constexpr double kDefaultGridStep = 0.01;

// Uniform grid start + i * step, i = 0 .. count-1.
struct Grid {
  double start = 0.0;
  double step = kDefaultGridStep;
  std::size_t count = 0;

  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  double last() const { return at(count == 0 ? 0 : count - 1); }
  Interval domain() const { return {start, last()}; }

  // Smallest grid with the given step whose domain contains range; the
  // first node sits on range.lo.
  static Grid covering(Interval range, double step = kDefaultGridStep);

  friend bool operator==(const Grid&, const Grid&) = default;
};

// Complex function tabulated on a uniform grid. Off-grid evaluation is
// linear interpolation between the two neighbouring nodes.
class SampledFunction {
 public:
  SampledFunction(Grid grid, std::vector<Complex> values);

  template <class F>
  static SampledFunction tabulate(const Grid& grid, F&& fn) {
    std::vector<Complex> values(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) values[i] = Complex(fn(grid.at(i)));
    return SampledFunction(grid, std::move(values));
  }

  const Grid& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Interval domain() const { return grid_.domain(); }
  bool covers(Interval range) const;

  // Throws InputError outside the domain.
  Complex operator()(double x) const;

  // Pointwise arithmetic; both operands must share the same grid.
  friend SampledFunction operator+(const SampledFunction& f, const SampledFunction& g);
  friend SampledFunction operator-(const SampledFunction& f, const SampledFunction& g);
  friend SampledFunction operator*(Complex c, const SampledFunction& f);

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

// Integral over range of the piecewise-linear interpolant of the node values
// integrand(i), i.e. the trapezoidal rule with partial end cells. T is double
// or Complex. Throws InputError when range leaves the grid domain.
template <class T, class F>
T integrate_nodes(const Grid& grid, Interval range, F&& integrand);

// ---------------------------------------------------------------------------

struct TrigTerm {
  Complex coefficient;
  double frequency = 0.0;
};

// Finite sum of c_k exp(2 pi i y_k x). Frequencies closer than 1e-12 are
// merged by adding their coefficients; terms are kept sorted by frequency.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  explicit TrigPolynomial(std::vector<TrigTerm> terms);

  std::span<const TrigTerm> terms() const { return terms_; }
  Complex operator()(double x) const;

 private:
  std::vector<TrigTerm> terms_;
};

Complex eval_trig_poly(const TrigPolynomial& p, double x);
SampledFunction tabulate(const TrigPolynomial& p, const Grid& grid);

// cos(2 pi x) + cos(2 pi sqrt2 x) as four exponentials with coefficient 1/2.
TrigPolynomial quasiperiodic_polynomial();

// ---------------------------------------------------------------------------

enum class TestFunctionKind { kTent, kRaisedCosine };

// Compactly supported continuous bump on [center - half_width,
// center + half_width] with peak value height.
struct TestFunction {
  TestFunctionKind kind = TestFunctionKind::kTent;
  double center = 0.0;
  double half_width = 0.4;
  double height = 1.0;

  void validate() const;
  double operator()(double x) const;
  double area() const;
};

// Centered tent, half width 0.4, height 1.
inline TestFunction default_test_function() { return TestFunction{}; }

// Closed-form integral of exp(-2 pi i y x) phi(x) dx.
Complex fourier_transform(const TestFunction& phi, double y);

// N(x) = sum over points p of phi(x - p). The grid must lie inside the
// window of the set shrunk by the support radius of phi.
SampledFunction comb_convolve(const PointSet& set, const TestFunction& phi,
                              const Grid& grid);

// Isosceles triangles on the tiles between consecutive end points: height 1
// on long tiles (length phi) and 1/2 on short tiles (length 1). The grid
// must lie between the first and last end point.
SampledFunction fibonacci_triangle(const PointSet& tile_ends, const Grid& grid);

// (1/2T) integral_{-T}^{T} exp(-2 pi i k x) f(x) dx by the trapezoidal rule.
Complex fourier_bohr_coefficient(const SampledFunction& f, double k, double T);

// ---------------------------------------------------------------------------
// Almost periodic examples

inline constexpr int kDefaultZooTerms = 30;

// cos(2 pi x) + cos(2 pi sqrt2 x)
SampledFunction zoo_quasiperiodic(const Grid& grid);
// sum_{n=1}^{terms} n^-2 sin(2 pi x / 2^n)
SampledFunction zoo_limit_periodic(const Grid& grid, int terms = kDefaultZooTerms);
// sum_{n=1}^{terms} n^-3 (sin(2 pi x / 2^n) + sin(2 pi sqrt5 x / 2^n))
SampledFunction zoo_limit_quasiperiodic(const Grid& grid,
                                        int terms = kDefaultZooTerms);

// Sup-norm bounds on the omitted tails (integral comparison).
double limit_periodic_tail_bound(int terms);
double limit_quasiperiodic_tail_bound(int terms);

}  // namespace aperiodic

#include "aperiodic/detail/integrate.hpp"
