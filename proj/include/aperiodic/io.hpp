#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "aperiodic/apfunctions.hpp"
#include "aperiodic/diffraction.hpp"
#include "aperiodic/pointset.hpp"
#include "aperiodic/seminorms.hpp"

namespace aperiodic {

// Shortest form that reads back to the same double.
std::string format_real(double x);

// "# window a b" followed by one coordinate per line.
void write_point_set(std::ostream& out, const PointSet& set);
PointSet read_point_set(std::istream& in);

// "# grid start step count" comment, then x,re,im rows.
void write_sampled_function(std::ostream& out, const SampledFunction& f);
SampledFunction read_sampled_function(std::istream& in);

void write_trig_polynomial(std::ostream& out, const TrigPolynomial& p);
TrigPolynomial read_trig_polynomial(std::istream& in);

// "fejer" or "box".
std::string bragg_window_name(BraggWindow w);
BraggWindow parse_bragg_window(std::string_view name);

void write_spectrum(std::ostream& out, const Spectrum& s);
Spectrum read_spectrum(std::istream& in);

void write_autocorrelation(std::ostream& out, const Autocorrelation& gamma);

void write_cpp_table(std::ostream& out, std::span<const CppRecord> rows);
void write_stability(std::ostream& out, const StabilityReport& report);
void write_almost_period_report(std::ostream& out, const AlmostPeriodReport& report);

// Whole-file helpers; writes go through a temporary file in the target
// directory and a rename.
std::string read_text_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace aperiodic
