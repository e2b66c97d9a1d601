#pragma once

// CSV and SVG output for power experiments, and CSV input for the CLI.

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padeloc/experiment.hpp"

namespace padeloc {

inline constexpr std::string_view kCsvHeader =
    "alpha,snr,xi_re,xi_im,m,reps,beta,statistic,test,mode,power,mc_stderr,discarded,seed";

/// Shortest decimal that round-trips to the same double.
std::string format_number(double x);

/// Header plus one line per row. DomainError on empty rows.
std::string format_csv(std::span<const PowerRow> rows);
void emit_csv(std::span<const PowerRow> rows, const std::filesystem::path& path);

struct SvgOptions {
  std::string title = "power vs SNR";
  /// Optional dashed reference curve, (snr, power) pairs.
  std::vector<std::pair<double, double>> reference;
  std::string reference_label = "hotelling theory";
};

/// Power (y, fixed to [0, 1]) against SNR (x, log scale), one polyline per
/// (statistic, test). Rows with snr <= 0 cannot be placed on a log axis and
/// are skipped. DomainError when no row has snr > 0.
std::string render_svg(std::span<const PowerRow> rows, const SvgOptions& options = {});
void emit_svg(std::span<const PowerRow> rows, const std::filesystem::path& path,
              const SvgOptions& options = {});

/// Rows of two numbers (re,im). A first line that does not parse is taken
/// as a header. Blank lines are skipped. UsageError on a malformed row.
std::vector<std::complex<double>> read_complex_csv(std::istream& in);
std::vector<std::complex<double>> read_complex_csv(const std::filesystem::path& path);

/// Writes text to path, IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace padeloc
