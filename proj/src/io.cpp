#include "aperiodic/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "aperiodic/error.hpp"

namespace aperiodic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view token, std::size_t line) {
  token = trim(token);
  double value = 0.0;
  if (token == "inf") return INFINITY;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line) + ": cannot parse number '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<double> split_reals(std::string_view text, char sep, std::size_t line) {
  std::vector<double> out;
  while (true) {
    const auto pos = text.find(sep);
    out.push_back(parse_real(text.substr(0, pos), line));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

// Calls row(fields, line) for every non-comment, non-header line. Comment
// lines are handed to comment(text, line).
template <class Comment, class Row>
void scan_lines(std::istream& in, std::string_view header, Comment&& comment, Row&& row) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view t = trim(text);
    if (t.empty()) continue;
    if (t.front() == '#') {
      comment(t.substr(1), line);
      continue;
    }
    if (!header.empty() && t == header) continue;
    row(t, line);
  }
}

}  // namespace

std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_point_set(std::ostream& out, const PointSet& set) {
  out << "# window " << format_real(set.window().lo) << ' ' << format_real(set.window().hi)
      << '\n';
  for (double x : set.points()) out << format_real(x) << '\n';
}

PointSet read_point_set(std::istream& in) {
  bool have_window = false;
  Interval window{};
  std::vector<double> points;
  scan_lines(
      in, "",
      [&](std::string_view c, std::size_t line) {
        c = trim(c);
        if (c.substr(0, 7) != "window ") return;
        const auto fields = split_reals(trim(c.substr(7)), ' ', line);
        if (fields.size() != 2) throw InputError("window header needs two numbers");
        window = {fields[0], fields[1]};
        have_window = true;
      },
      [&](std::string_view t, std::size_t line) { points.push_back(parse_real(t, line)); });
  if (!have_window) throw InputError("point set file has no '# window a b' header");
  return PointSet(std::move(points), window);
}

void write_sampled_function(std::ostream& out, const SampledFunction& f) {
  const Grid& g = f.grid();
  out << "# grid " << format_real(g.start) << ' ' << format_real(g.step) << ' ' << g.count
      << '\n';
  out << "x,re,im\n";
  const auto values = f.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << format_real(g.at(i)) << ',' << format_real(values[i].real()) << ','
        << format_real(values[i].imag()) << '\n';
  }
}

SampledFunction read_sampled_function(std::istream& in) {
  bool have_grid = false;
  Grid grid{};
  std::vector<Complex> values;
  scan_lines(
      in, "x,re,im",
      [&](std::string_view c, std::size_t line) {
        c = trim(c);
        if (c.substr(0, 5) != "grid ") return;
        const auto fields = split_reals(trim(c.substr(5)), ' ', line);
        if (fields.size() != 3 || fields[2] < 0) throw InputError("bad grid header");
        grid = {fields[0], fields[1], static_cast<std::size_t>(fields[2])};
        have_grid = true;
      },
      [&](std::string_view t, std::size_t line) {
        const auto fields = split_reals(t, ',', line);
        if (fields.size() != 3) {
          throw InputError("line " + std::to_string(line) + ": expected x,re,im");
        }
        values.emplace_back(fields[1], fields[2]);
      });
  if (!have_grid) throw InputError("function file has no '# grid start step count' header");
  return SampledFunction(grid, std::move(values));
}

void write_trig_polynomial(std::ostream& out, const TrigPolynomial& p) {
  out << "re_coeff,im_coeff,frequency\n";
  for (const TrigTerm& t : p.terms()) {
    out << format_real(t.coefficient.real()) << ',' << format_real(t.coefficient.imag()) << ','
        << format_real(t.frequency) << '\n';
  }
}

TrigPolynomial read_trig_polynomial(std::istream& in) {
  std::vector<TrigTerm> terms;
  scan_lines(
      in, "re_coeff,im_coeff,frequency", [](std::string_view, std::size_t) {},
      [&](std::string_view t, std::size_t line) {
        const auto f = split_reals(t, ',', line);
        if (f.size() != 3) throw InputError("line " + std::to_string(line) + ": expected 3 fields");
        terms.push_back({Complex(f[0], f[1]), f[2]});
      });
  return TrigPolynomial(std::move(terms));
}

std::string bragg_window_name(BraggWindow w) {
  return w == BraggWindow::kFejer ? "fejer" : "box";
}

BraggWindow parse_bragg_window(std::string_view name) {
  if (name == "fejer") return BraggWindow::kFejer;
  if (name == "box") return BraggWindow::kRectangular;
  throw InputError("unknown Bragg weight '" + std::string(name) + "' (fejer or box)");
}

void write_spectrum(std::ostream& out, const Spectrum& s) {
  out << "# n=" << format_real(s.half_width) << " L=" << format_real(s.intensity_window)
      << " weight=" << bragg_window_name(s.bragg_window) << '\n';
  for (const std::string& note : s.notes) out << "# " << note << '\n';
  out << "y,re_A,im_A,intensity\n";
  for (const Peak& p : s.peaks) {
    out << format_real(p.y) << ',' << format_real(p.amplitude.real()) << ','
        << format_real(p.amplitude.imag()) << ',' << format_real(p.intensity) << '\n';
  }
}

Spectrum read_spectrum(std::istream& in) {
  Spectrum s;
  scan_lines(
      in, "y,re_A,im_A,intensity",
      [&](std::string_view c, std::size_t line) {
        c = trim(c);
        if (c.substr(0, 2) != "n=") {
          s.notes.emplace_back(c);
          return;
        }
        const auto space = c.find(" L=");
        if (space == std::string_view::npos) throw InputError("bad spectrum header");
        s.half_width = parse_real(c.substr(2, space - 2), line);
        auto rest = c.substr(space + 3);
        const auto weight = rest.find(" weight=");
        if (weight != std::string_view::npos) {
          s.bragg_window = parse_bragg_window(rest.substr(weight + 8));
          rest = rest.substr(0, weight);
        }
        s.intensity_window = parse_real(rest, line);
      },
      [&](std::string_view t, std::size_t line) {
        const auto f = split_reals(t, ',', line);
        if (f.size() != 4) throw InputError("line " + std::to_string(line) + ": expected 4 fields");
        s.peaks.push_back({f[0], Complex(f[1], f[2]), f[3], f[3]});
      });
  return s;
}

void write_autocorrelation(std::ostream& out, const Autocorrelation& gamma) {
  out << "# n=" << format_real(gamma.half_width)
      << " bin_tolerance=" << format_real(gamma.bin_tolerance)
      << " max_difference=" << format_real(gamma.max_difference)
      << " points=" << gamma.point_count << '\n';
  for (const std::string& w : gamma.warnings) out << "# warning: " << w << '\n';
  out << "z,eta\n";
  for (std::size_t i = 0; i < gamma.z.size(); ++i) {
    out << format_real(gamma.z[i]) << ',' << format_real(gamma.eta[i]) << '\n';
  }
}

void write_cpp_table(std::ostream& out, std::span<const CppRecord> rows) {
  out << "y,intensity,intensity_raw,amplitude_squared,discrepancy\n";
  for (const CppRecord& r : rows) {
    out << format_real(r.y) << ',' << format_real(r.intensity) << ','
        << format_real(r.intensity_raw) << ',' << format_real(r.amplitude_squared) << ','
        << format_real(r.discrepancy) << '\n';
  }
}

void write_stability(std::ostream& out, const StabilityReport& report) {
  out << "# y=" << format_real(report.y) << " spread_over_n=" << format_real(report.spread_over_n)
      << " spread_over_centers=" << format_real(report.spread_over_centers) << '\n';
  out << "n,center,re_A,im_A\n";
  for (std::size_t i = 0; i < report.n_sequence.size(); ++i) {
    for (std::size_t j = 0; j < report.centers.size(); ++j) {
      const Complex a = report.amplitudes[i][j];
      out << format_real(report.n_sequence[i]) << ',' << format_real(report.centers[j]) << ','
          << format_real(a.real()) << ',' << format_real(a.imag()) << '\n';
    }
  }
}

void write_almost_period_report(std::ostream& out, const AlmostPeriodReport& report) {
  out << "epsilon: " << format_real(report.epsilon) << '\n';
  out << "kind: " << describe(report.kind) << '\n';
  out << "scan_range: " << format_real(report.scan_range.lo) << ' '
      << format_real(report.scan_range.hi) << '\n';
  out << "scan_step: " << format_real(report.scan_step) << '\n';
  out << "evaluations: " << report.evaluations << '\n';
  out << "max_gap: " << format_real(report.max_gap) << '\n';
  for (const std::string& note : report.notes) out << "note: " << note << '\n';
  out << "periods: " << report.periods.size() << '\n';
  for (double t : report.periods) out << format_real(t) << '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace aperiodic
