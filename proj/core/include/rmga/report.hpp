#pragma once

#include <string>
#include <string_view>

#include "rmga/harness.hpp"
#include "rmga/optimizer.hpp"

namespace rmga {

enum class Format { Text, Csv, Json };

/// Parses "text", "csv" or "json". Throws UsageError otherwise.
Format parse_format(std::string_view name);

/// 12 significant digits; fixed notation for magnitudes below 1e6, no trailing
/// zeros, and -0 printed as 0.
std::string format_number(double value);

/// Coordinates joined by ';' (the CSV best_point cell).
std::string format_point_csv(const Point& p);

inline constexpr std::string_view kCsvHeader =
    "function,rms,trm,best_point,bp,sd,seed,terminated_by";

struct RenderOptions {
  /// Adds per-run wall times. Off by default so equal inputs render equal bytes.
  bool include_timing = false;
};

/// Pure function of the report.
///   csv:  kCsvHeader, then one row per run (sd is the function's aggregate SD).
///   json: SuiteReport field names.
///   text: a table in Algorithm/Function/RMS/TRM/Best Point/BP/SD order plus,
///         when present, the average-generation comparison with its PNG rows.
std::string render(const SuiteReport& report, Format format, RenderOptions options = {});

/// Line-delimited trace records: csv rows (text and csv) or one JSON object per line.
std::string render_trace(const Trace& trace, Format format);

std::string render_grid_oracle(const ObjectiveSpec& spec, double resolution,
                               const GridOracleResult& result, Format format);

std::string render_reachability(const ObjectiveSpec& spec, const ReachabilityResult& result,
                                Format format);

}  // namespace rmga
