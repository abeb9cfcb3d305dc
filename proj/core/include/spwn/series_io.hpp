#pragma once

#include <optional>
#include <string>

#include "spwn/acf.hpp"
#include "spwn/experiment.hpp"
#include "spwn/time_series.hpp"

namespace spwn {

/// A series file read back into memory: the observations plus the header
/// line, if the file had one.
struct SeriesFile {
    TimeSeries series;
    std::optional<std::string> header;
};

/// Read a one-column CSV, one observation per line. A single leading
/// non-numeric line is treated as a header. Parsing is locale-independent
/// (dot decimal separator only); a bad data line raises std::runtime_error
/// naming the 1-based line number. Empty files are rejected.
[[nodiscard]] SeriesFile read_series_csv(const std::string& path);

/// Write a series in the same one-column shape, 17 significant digits, so
/// a write/read round trip reproduces every value exactly.
void write_series_csv(const std::string& path, const TimeSeries& xs,
                      const std::optional<std::string>& header = std::nullopt);

/// Shortest decimal string that parses back to exactly the same double;
/// used for grid labels and parameter columns.
[[nodiscard]] std::string format_double(double v);

[[nodiscard]] std::string to_string(WCorrection c);
[[nodiscard]] WCorrection correction_from_string(const std::string& s);

/// Per-lambda diagnostic blocks of one input series, as emitted by the
/// `acf` and `portmanteau` commands.
struct DiagnosticsReport {
    std::size_t n = 0;
    std::size_t max_lag = 0;
    double level = 0.95;
    WCorrection correction = WCorrection::n_over_n_minus_i;
    std::vector<LambdaDiagnostics> blocks;
};

/// Lossless JSON serialization of a diagnostics report (numbers round-trip
/// exactly through parse).
[[nodiscard]] std::string diagnostics_to_json(const DiagnosticsReport& report);
[[nodiscard]] DiagnosticsReport diagnostics_from_json(const std::string& text);

/// Aligned text rendering of the same numbers; lags outside their band are
/// marked in the last column.
[[nodiscard]] std::string diagnostics_to_text(const DiagnosticsReport& report);

/// Rejection-rate matrix as CSV: header row of lambda values, leading
/// column of model parameter values, plus a theoretical w11 column (NA
/// above the fourth-moment boundary) for ARCH grids. Rates carry three
/// decimals. Deterministic byte-for-byte for a given report.
[[nodiscard]] std::string experiment_to_csv(const ExperimentReport& report);

/// Full config echo + matrix + metadata as JSON. Wall time is intentionally
/// omitted: two runs of the same config must serialize identically.
[[nodiscard]] std::string experiment_to_json(const ExperimentReport& report);

}  // namespace spwn
