#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "rmga/harness.hpp"

namespace rmga::testing {

/// Hand-built suite report with fixed numbers, independent of the optimizer.
inline SuiteReport fixture_report() {
  SuiteReport report;
  report.metadata.base_seed = 7;
  report.metadata.replicates = 2;

  std::vector<RunReport> quad_runs{
      {"quad", 0.1, 20, Point{0.0, 0.4}, 0.0, 7, 0.5, Termination::Stalled},
      {"quad", 0.1, 22, Point{0.0, 0.4}, 0.0, 8, 0.25, Termination::Stalled},
  };
  std::vector<RunReport> f2_runs{
      {"f2", 0.1, 11, Point{0.948, 0.948}, 0.2457135616, 7, 0.125, Termination::Stalled},
      {"f2", 0.1, 13, Point{1.048, 1.048}, 0.2555, 8, 0.125, Termination::GenerationCap},
  };
  std::vector<RunReport> f4_runs{
      {"f4", 0.1, 14, Point(std::vector<double>(30, -0.02)), 0.0000744, 7, 1.0,
       Termination::Stalled},
      {"f4", 0.1, 12, Point(std::vector<double>(30, 0.08)), 0.0190464, 8, 1.0,
       Termination::Stalled},
  };
  const auto entry = [](std::string name, bool noisy, std::vector<RunReport> runs) {
    SuiteEntry e{std::move(name), noisy, std::move(runs), {}};
    e.stats = aggregate(e.runs);
    return e;
  };
  report.entries.push_back(entry("f2", false, std::move(f2_runs)));
  report.entries.push_back(entry("f4", true, std::move(f4_runs)));
  report.entries.push_back(entry("quad", false, std::move(quad_runs)));
  report.png = compute_png(report.entries);
  return report;
}

inline std::string golden_path(const std::string& name) {
  return std::string(RMGA_GOLDEN_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rmga::testing
