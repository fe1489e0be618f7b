#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "aperiodic/apfunctions.hpp"
#include "aperiodic/diffraction.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/io.hpp"
#include "aperiodic/pointset.hpp"
#include "aperiodic/seminorms.hpp"

namespace aperiodic::cli {

namespace {

constexpr double kDefaultDiffractionN = 1e4;

// Collects warnings; any warning turns a successful run into exit code 2.
struct Run {
  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> warnings;

  void warn(const std::string& w) {
    warnings.push_back(w);
    err << "warning: " << w << '\n';
  }
};

std::string render(const std::function<void(std::ostream&)>& writer) {
  std::ostringstream ss;
  writer(ss);
  return ss.str();
}

// Writes to path atomically, or to the run's stdout when path is empty.
void emit(Run& run, const std::string& path, const std::string& contents) {
  if (path.empty()) {
    run.out << contents;
  } else {
    write_file_atomic(path, contents);
  }
}

PointSet load_points(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_point_set(in);
}

SampledFunction load_function(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_sampled_function(in);
}

Interval to_interval(const std::vector<double>& v, const char* what) {
  if (v.size() != 2 || !(v[0] <= v[1])) {
    throw InputError(std::string(what) + " needs two increasing numbers");
  }
  return {v[0], v[1]};
}

// Largest n <= cap with [-n, n] inside the window of the set.
double auto_half_width(const PointSet& set, double requested, double cap) {
  if (requested > 0.0) return requested;
  const double reach = std::min(-set.window().lo, set.window().hi);
  if (!(reach > 0.0)) throw InputError("point set window does not contain 0");
  return std::min(cap, reach);
}

// ---------------------------------------------------------------------------

struct TestFunctionFlags {
  std::string kind = "tent";
  double half_width = 0.4;
  double height = 1.0;
  double center = 0.0;

  void add(CLI::App* app) {
    app->add_option("--phi", kind, "test function kind")
        ->check(CLI::IsMember({"tent", "raised-cosine"}))
        ->capture_default_str();
    app->add_option("--half-width", half_width, "support radius of the test function")
        ->capture_default_str();
    app->add_option("--height", height, "peak value of the test function")->capture_default_str();
    app->add_option("--center", center, "center of the test function")->capture_default_str();
  }

  TestFunction get() const {
    TestFunction phi{kind == "tent" ? TestFunctionKind::kTent : TestFunctionKind::kRaisedCosine,
                     center, half_width, height};
    phi.validate();
    return phi;
  }
};

struct KindFlags {
  std::string kind = "besicovitch";
  double n = 1000.0;
  double translate_step = 0.1;
  std::vector<double> translates;

  void add(CLI::App* app, const std::string& default_kind) {
    kind = default_kind;
    app->add_option("--kind", kind, "seminorm")
        ->check(CLI::IsMember({"sup", "besicovitch", "weyl"}))
        ->capture_default_str();
    app->add_option("--n", n, "averaging half width (besicovitch, weyl)")->capture_default_str();
    app->add_option("--translate-step", translate_step, "weyl translate grid step")
        ->capture_default_str();
    app->add_option("--translates", translates, "weyl translate range lo hi (default [0, 2n])")
        ->expected(2);
  }

  SeminormKind get() const {
    SeminormKind out;
    if (kind == "sup") {
      out = SupNorm{};
    } else if (kind == "besicovitch") {
      out = BesicovitchNorm{n};
    } else {
      WeylNorm w = WeylNorm::with_defaults(n);
      w.translate_step = translate_step;
      if (!translates.empty()) w.translates = to_interval(translates, "--translates");
      out = w;
    }
    validate(out);
    return out;
  }
};

// ---------------------------------------------------------------------------

struct GenerateFlags {
  std::string what;
  std::string out;
  unsigned iterations = 10;
  std::int64_t n = 100;
  std::int64_t big_n = 10000;
  double half_width = 1e4;
  std::vector<double> range{-1000.0, 1000.0};
  double step = kDefaultGridStep;
  int terms = kDefaultZooTerms;
  std::string input;
  TestFunctionFlags phi;
};

void report_points(Run& run, const PointSet& set) {
  const Interval w = set.window();
  char buf[160];
  std::snprintf(buf, sizeof buf, "points %zu window [%s, %s] density %.6f\n", set.size(),
                format_real(w.lo).c_str(), format_real(w.hi).c_str(),
                w.length() > 0 ? static_cast<double>(set.size()) / w.length() : 0.0);
  run.out << buf;
}

// Fibonacci tile ends whose window covers range.
PointSet covering_fibonacci(Interval range) {
  for (unsigned k = 0; k < 60; ++k) {
    PointSet p = fibonacci_substitution_points(k);
    if (p.window().lo <= range.lo && p.window().hi >= range.hi) return p;
  }
  throw InputError("range too large for the Fibonacci generator");
}

void cmd_generate(Run& run, const GenerateFlags& f) {
  const Interval range = to_interval(f.range, "--range");
  const std::string& w = f.what;
  if (w == "fibonacci" || w == "cps" || w == "lattice" || w == "squarefree" ||
      w == "shifted-halves" || w == "digit-parity") {
    PointSet set;
    if (w == "fibonacci") {
      set = fibonacci_substitution_points(f.iterations);
    } else if (w == "cps") {
      set = model_set(CutProjectScheme::fibonacci(), Interval{-f.half_width, f.half_width});
    } else if (w == "lattice") {
      set = integer_lattice(f.n);
    } else if (w == "squarefree") {
      set = squarefree_points(f.big_n);
    } else if (w == "shifted-halves") {
      set = shifted_halves(f.big_n);
    } else {
      set = digit_parity_points(f.big_n);
    }
    emit(run, f.out, render([&](std::ostream& o) { write_point_set(o, set); }));
    if (!f.out.empty()) report_points(run, set);
    return;
  }
  const Grid grid = Grid::covering(range, f.step);
  SampledFunction fn = [&] {
    if (w == "fibtri") return fibonacci_triangle(covering_fibonacci(range), grid);
    if (w == "comb") {
      if (f.input.empty()) throw InputError("generate comb needs --input");
      return comb_convolve(load_points(f.input), f.phi.get(), grid);
    }
    if (w == "quasiperiodic") return zoo_quasiperiodic(grid);
    if (w == "limit-periodic") return zoo_limit_periodic(grid, f.terms);
    return zoo_limit_quasiperiodic(grid, f.terms);
  }();
  emit(run, f.out, render([&](std::ostream& o) { write_sampled_function(o, fn); }));
  if (w == "limit-periodic") {
    run.err << "truncation tail bound " << format_real(limit_periodic_tail_bound(f.terms)) << '\n';
  } else if (w == "limit-quasiperiodic") {
    run.err << "truncation tail bound " << format_real(limit_quasiperiodic_tail_bound(f.terms))
            << '\n';
  }
}

// ---------------------------------------------------------------------------

struct DiffractFlags {
  std::string input;
  std::string out;
  std::vector<double> range{0.0, 3.0};
  double step = 1e-3;
  double n = 0.0;
  double threshold = 0.0;
  double intensity_window = 0.0;
  std::string weight = "fejer";
  int fibonacci_index = 0;
  std::string autocorrelation_out;
  double max_difference = kDefaultMaxDifference;
  double bin_tolerance = kDefaultBinTolerance;
};

void cmd_diffract(Run& run, const DiffractFlags& f) {
  const PointSet set = load_points(f.input);
  PeakScanOptions opt;
  opt.y_range = to_interval(f.range, "--range");
  opt.y_step = f.step;
  opt.n = auto_half_width(set, f.n, kDefaultDiffractionN);
  opt.threshold = f.threshold;
  opt.intensity_window = f.intensity_window;
  opt.bragg_window = parse_bragg_window(f.weight);
  if (f.fibonacci_index > 0) {
    opt.candidates = fibonacci_frequency_candidates(opt.y_range, f.fibonacci_index);
  }
  const Spectrum s = peak_scan(set, opt);
  for (const Peak& p : s.peaks) {
    if (p.intensity_raw < -kNegativeIntensityTolerance) {
      run.warn("negative Bragg estimate " + format_real(p.intensity_raw) + " at y=" +
               format_real(p.y));
    }
  }
  for (const std::string& note : s.notes) {
    if (note.rfind("bins may merge", 0) == 0) run.warn(note);
  }
  emit(run, f.out, render([&](std::ostream& o) { write_spectrum(o, s); }));
  if (!f.autocorrelation_out.empty()) {
    const Autocorrelation gamma =
        autocorrelation(set, opt.n, f.bin_tolerance, std::min(f.max_difference, 2.0 * opt.n));
    for (const std::string& w : gamma.warnings) run.warn(w);
    write_file_atomic(f.autocorrelation_out,
                      render([&](std::ostream& o) { write_autocorrelation(o, gamma); }));
  }
  if (!f.out.empty()) run.out << "peaks " << s.peaks.size() << " n " << format_real(opt.n) << '\n';
}

struct CppFlags {
  std::string input;
  std::string out;
  std::vector<double> ys;
  double n = 0.0;
  double intensity_window = 100.0;
  std::string weight = "fejer";
};

void cmd_cpp(Run& run, const CppFlags& f) {
  const PointSet set = load_points(f.input);
  const double n = auto_half_width(set, f.n, kDefaultDiffractionN);
  const auto rows = cpp_check(set, f.ys, n, std::min(f.intensity_window, 2.0 * n),
                               parse_bragg_window(f.weight));
  for (const CppRecord& r : rows) {
    if (r.intensity_raw < -kNegativeIntensityTolerance) {
      run.warn("negative Bragg estimate at y=" + format_real(r.y));
    }
  }
  emit(run, f.out, render([&](std::ostream& o) { write_cpp_table(o, rows); }));
}

struct SeminormFlags {
  std::string input;
  KindFlags kind;
};

void cmd_seminorm(Run& run, const SeminormFlags& f) {
  const SampledFunction fn = load_function(f.input);
  const SeminormKind kind = f.kind.get();
  const SeminormDiagnostic d = seminorm_with_diagnostic(fn, kind);
  run.out << "kind: " << describe(kind) << '\n';
  run.out << "estimate: " << format_real(d.estimate) << '\n';
  if (!std::holds_alternative<SupNorm>(kind)) {
    run.out << "estimate_at_2n: " << format_real(d.estimate_doubled) << '\n';
    if (std::isnan(d.estimate_doubled)) run.warn("grid does not cover the doubled window");
  }
}

struct ApsFlags {
  std::string input;
  std::string out;
  double epsilon = 0.1;
  std::vector<double> range{0.5, 100.0};
  double step = 0.01;
  std::string candidates = "grid";
  double radius = 0.2;
  KindFlags kind;
};

void cmd_aps(Run& run, const ApsFlags& f) {
  const SampledFunction fn = load_function(f.input);
  const Interval range = to_interval(f.range, "--range");
  const SeminormKind kind = f.kind.get();
  AlmostPeriodReport report;
  if (f.candidates == "fibonacci") {
    const auto cands = fibonacci_return_candidates(range, f.radius);
    report = scan_candidate_periods(fn, f.epsilon, kind, cands, range);
    report.notes.push_back("candidates: m + n phi with |m + n phi'| < " + format_real(f.radius) +
                           " (calibration choice)");
  } else {
    report = scan_almost_periods(fn, f.epsilon, kind, range, f.step);
  }
  emit(run, f.out, render([&](std::ostream& o) { write_almost_period_report(o, report); }));
}

struct ReconstructFlags {
  std::string input;
  std::string spectrum;
  std::string out;
  std::size_t top = 20;
  std::string rank = "weight";
  bool symmetrize = true;
  std::vector<double> range{-100.0, 100.0};
  double step = kDefaultGridStep;
  TestFunctionFlags phi;
};

void cmd_reconstruct(Run& run, const ReconstructFlags& f) {
  const PointSet set = load_points(f.input);
  std::istringstream in(read_text_file(f.spectrum));
  Spectrum s = read_spectrum(in);
  const TestFunction phi = f.phi.get();
  s = f.rank == "weight" ? top_k_by_weight(s, phi, f.top) : top_k_by_amplitude(s, f.top);
  if (f.symmetrize) s = symmetrized(s);
  const Grid grid = Grid::covering(to_interval(f.range, "--range"), f.step);
  const Reconstruction r = fourier_bohr_reconstruction(set, phi, s, grid);
  const SampledFunction comb = comb_convolve(set, phi, grid);
  const double half = 0.5 * grid.domain().length();
  const Interval centred{grid.domain().center() - half, grid.domain().center() + half};
  const SampledFunction err = comb - r.function;
  const double sup_error = seminorm_estimate(err, SupNorm{});
  const double mean_error = integrate_nodes<double>(grid, centred, [&](std::size_t i) {
                              return std::abs(err.values()[i]);
                            }) / centred.length();
  emit(run, f.out, render([&](std::ostream& o) { write_sampled_function(o, r.function); }));
  std::ostream& log = f.out.empty() ? run.err : run.out;
  log << "terms " << s.peaks.size() << " imaginary_residue " << format_real(r.imaginary_residue)
      << " mean_abs_error " << format_real(mean_error) << " sup_error " << format_real(sup_error)
      << '\n';
}

struct StabilityFlags {
  std::string input;
  std::string out;
  double y = 0.0;
  std::vector<double> ns;
  std::vector<double> centers{0.0};
  bool hole = false;
};

void cmd_stability(Run& run, const StabilityFlags& f) {
  const PointSet set = load_points(f.input);
  std::vector<double> centers = f.centers;
  std::vector<double> ns = f.ns;
  if (ns.empty()) ns.push_back(auto_half_width(set, 0.0, kDefaultDiffractionN));
  if (f.hole) {
    const double reach = *std::max_element(ns.begin(), ns.end());
    const Interval inner{set.window().lo + reach, set.window().hi - reach};
    const auto h = largest_hole(set, inner);
    if (!h) throw InputError("no hole found: window too small for the requested n");
    centers.push_back(h->center);
    run.err << "hole center " << format_real(h->center) << " width " << format_real(h->width)
            << '\n';
  }
  const StabilityReport report = amplitude_stability(set, f.y, ns, centers);
  emit(run, f.out, render([&](std::ostream& o) { write_stability(o, report); }));
}

}  // namespace

std::string defaults_table() {
  return R"(Defaults
  grid step               0.01
  test function           tent, half width 0.4, height 1, center 0
  diffraction n           min(1e4, half width of the input window)
  peak threshold          0.05 * density
  intensity window L      min(100, 2n)
  Bragg weight            fejer (1 - |z|/L); box selects the plain average
  bin tolerance           1e-9
  max difference          50
  seminorm n              1000
  weyl translates         step 0.1 over [0, 2n]
  almost-period scan      step 0.01, refinement tolerance 1e-6
  candidate radius        0.2
  zoo terms               30
  threads                 APERIODIC_THREADS, else hardware concurrency
Exit codes: 0 ok, 2 finished with numerical warnings, 1 error
)";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Aperiodic point sets, diffraction and almost periodicity"};
  app.footer(defaults_table());
  app.require_subcommand(1);

  Run ctx{out, err, {}};
  std::function<void()> action;

  GenerateFlags gen;
  auto* g = app.add_subcommand("generate", "write a point set or a sampled function");
  g->add_option("what", gen.what, "generator")
      ->required()
      ->check(CLI::IsMember({"fibonacci", "cps", "lattice", "squarefree", "shifted-halves",
                             "digit-parity", "fibtri", "comb", "quasiperiodic",
                             "limit-periodic", "limit-quasiperiodic"}));
  g->add_option("--out", gen.out, "output file (stdout when omitted)");
  g->add_option("--iterations", gen.iterations, "substitution steps")->capture_default_str();
  g->add_option("--n", gen.n, "lattice half width")->capture_default_str();
  g->add_option("--N", gen.big_n, "bound for arithmetic sets")->capture_default_str();
  g->add_option("--extent", gen.half_width, "physical half width for cps")
      ->capture_default_str();
  g->add_option("--range", gen.range, "function domain lo hi")->expected(2);
  g->add_option("--step", gen.step, "function grid step")->capture_default_str();
  g->add_option("--terms", gen.terms, "zoo series terms")->capture_default_str();
  g->add_option("--input", gen.input, "point set for comb");
  gen.phi.add(g);
  g->callback([&] { action = [&] { cmd_generate(ctx, gen); }; });

  DiffractFlags dif;
  auto* d = app.add_subcommand("diffract", "peak scan with amplitudes and Bragg intensities");
  d->add_option("--input", dif.input, "point set file")->required();
  d->add_option("--out", dif.out, "spectrum CSV (stdout when omitted)");
  d->add_option("--range", dif.range, "frequency range lo hi")->expected(2);
  d->add_option("--step", dif.step, "frequency grid step")->capture_default_str();
  d->add_option("--n", dif.n, "averaging half width");
  d->add_option("--threshold", dif.threshold, "|A| cut");
  d->add_option("--L", dif.intensity_window, "Bragg estimator window");
  d->add_option("--weight", dif.weight, "Bragg weight over |z| <= L")
      ->check(CLI::IsMember({"fejer", "box"}))
      ->capture_default_str();
  d->add_option("--fibonacci-candidates", dif.fibonacci_index,
                "seed (m + n phi)/sqrt5 with |m|, |n| up to this bound");
  d->add_option("--autocorrelation-out", dif.autocorrelation_out, "also write z,eta");
  d->add_option("--max-difference", dif.max_difference, "autocorrelation range")
      ->capture_default_str();
  d->add_option("--bin-tolerance", dif.bin_tolerance, "autocorrelation bin tolerance")
      ->capture_default_str();
  d->callback([&] { action = [&] { cmd_diffract(ctx, dif); }; });

  CppFlags cpp;
  auto* c = app.add_subcommand("cpp", "compare Bragg intensity with |A|^2");
  c->add_option("--input", cpp.input, "point set file")->required();
  c->add_option("--ys", cpp.ys, "frequencies")->required();
  c->add_option("--n", cpp.n, "averaging half width");
  c->add_option("--L", cpp.intensity_window, "Bragg estimator window")->capture_default_str();
  c->add_option("--weight", cpp.weight, "Bragg weight over |z| <= L")
      ->check(CLI::IsMember({"fejer", "box"}))
      ->capture_default_str();
  c->add_option("--out", cpp.out, "table (stdout when omitted)");
  c->callback([&] { action = [&] { cmd_cpp(ctx, cpp); }; });

  SeminormFlags sem;
  auto* s = app.add_subcommand("seminorm", "seminorm estimate of a sampled function");
  s->add_option("--input", sem.input, "function file")->required();
  sem.kind.add(s, "besicovitch");
  s->callback([&] { action = [&] { cmd_seminorm(ctx, sem); }; });

  ApsFlags aps;
  auto* a = app.add_subcommand("aps", "scan for epsilon almost periods");
  a->add_option("--input", aps.input, "function file")->required();
  a->add_option("--out", aps.out, "report (stdout when omitted)");
  a->add_option("--epsilon", aps.epsilon, "threshold")->capture_default_str();
  a->add_option("--range", aps.range, "translate range lo hi")->expected(2);
  a->add_option("--step", aps.step, "translate grid step")->capture_default_str();
  a->add_option("--candidates", aps.candidates, "grid or fibonacci returns")
      ->check(CLI::IsMember({"grid", "fibonacci"}))
      ->capture_default_str();
  a->add_option("--radius", aps.radius, "internal radius for fibonacci returns")
      ->capture_default_str();
  aps.kind.add(a, "sup");
  a->callback([&] { action = [&] { cmd_aps(ctx, aps); }; });

  ReconstructFlags rec;
  auto* r = app.add_subcommand("reconstruct", "partial Fourier-Bohr series of the comb");
  r->add_option("--input", rec.input, "point set file")->required();
  r->add_option("--spectrum", rec.spectrum, "spectrum CSV")->required();
  r->add_option("--out", rec.out, "function file (stdout when omitted)");
  r->add_option("--top", rec.top, "number of nonnegative frequencies kept")
      ->capture_default_str();
  r->add_option("--rank", rec.rank, "amplitude or weight")
      ->check(CLI::IsMember({"amplitude", "weight"}))
      ->capture_default_str();
  r->add_flag("!--no-symmetrize", rec.symmetrize, "keep only the listed frequencies");
  r->add_option("--range", rec.range, "domain lo hi")->expected(2);
  r->add_option("--step", rec.step, "grid step")->capture_default_str();
  rec.phi.add(r);
  r->callback([&] { action = [&] { cmd_reconstruct(ctx, rec); }; });

  StabilityFlags stab;
  auto* st = app.add_subcommand("stability", "amplitude over window sizes and centers");
  st->add_option("--input", stab.input, "point set file")->required();
  st->add_option("--out", stab.out, "table (stdout when omitted)");
  st->add_option("--y", stab.y, "frequency")->capture_default_str();
  st->add_option("--ns", stab.ns, "window half widths");
  st->add_option("--centers", stab.centers, "window centers");
  st->add_flag("--hole", stab.hole, "add the center of the widest gap reachable by every window");
  st->callback([&] { action = [&] { cmd_stability(ctx, stab); }; });

  std::vector<const char*> argv{"aperiodic"};
  for (const std::string& s_arg : args) argv.push_back(s_arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (action) action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return ctx.warnings.empty() ? kExitOk : kExitWarning;
}

}  // namespace aperiodic::cli
