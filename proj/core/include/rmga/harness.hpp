#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmga/objectives.hpp"
#include "rmga/optimizer.hpp"

namespace rmga {

/// One replicate, in benchmark-table vocabulary.
struct RunReport {
  std::string function;
  double rms = 0.0;
  std::uint64_t trm = 0;
  Point best_point;
  double bp = 0.0;
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // seconds
  Termination terminated_by = Termination::Stalled;
};

struct AggregateStats {
  std::size_t runs = 0;
  double mean_bp = 0.0;
  double sd_bp = 0.0;  // population SD (divides by N)
  double min_bp = 0.0;
  double mean_trm = 0.0;
  std::uint64_t min_trm = 0;
  std::uint64_t max_trm = 0;
};

struct SuiteEntry {
  std::string function;
  bool noisy = false;
  std::vector<RunReport> runs;
  AggregateStats stats;
};

struct BaselineRow {
  std::string_view algorithm;
  std::array<double, 5> generations;  // F1..F5
};

/// Average generation counts published for other algorithms on F1..F5. These
/// are reference constants; none of these algorithms is implemented here.
inline constexpr std::array<BaselineRow, 5> kPublishedBaselines{{
    {"PGA(lambda=4)", {1170, 1235, 3481, 3194, 1256}},
    {"PGA(lambda=8)", {1526, 1671, 3634, 5243, 2076}},
    {"Grefensstette", {2210, 14229, 2259, 3070, 4334}},
    {"Eshelman", {1538, 9477, 1740, 4137, 3004}},
    {"DE", {260, 670, 125, 2300, 1200}},
}};
inline constexpr std::array<double, 5> kDeGenerations{260, 670, 125, 2300, 1200};
inline constexpr std::array<double, 5> kPublishedRmgaTrm{78, 16, 7, 195, 340};
inline constexpr std::array<double, 5> kPublishedPng{3.333, 41.875, 17.857, 11.794, 3.529};
/// Improvement factor quoted for F2 in prose; disagrees with the PNG row (41.875).
inline constexpr double kPublishedF2ProseFactor = 64.0;
inline constexpr std::array<std::string_view, 5> kDeJongNames{"f1", "f2", "f3", "f4", "f5"};

/// Ratio of published DE generations to measured mean TRM on F1..F5. A ratio
/// is absent when the function was not run or its mean TRM is zero.
struct PngTable {
  std::array<std::optional<double>, 5> measured_trm;
  std::array<std::optional<double>, 5> ratio;
};

struct SuiteMetadata {
  std::uint64_t base_seed = 0;
  std::size_t replicates = 1;
  RmConfig config;
  std::optional<std::string> timestamp;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  SuiteMetadata metadata;
  std::optional<PngTable> png;
};

/// Runs rmga_run with seeds base_seed, base_seed + 1, ... on up to `threads`
/// workers (0 = hardware concurrency). Reports come back in seed order.
std::vector<RunReport> run_replicates(const ObjectiveSpec& spec, const RmConfig& config,
                                      std::size_t replicates, std::uint64_t base_seed,
                                      std::size_t threads = 0);

/// Throws UsageError on empty input. Independent of report order.
AggregateStats aggregate(std::span<const RunReport> reports);

SuiteEntry make_entry(const ObjectiveSpec& spec, std::vector<RunReport> runs);

PngTable compute_png(std::span<const SuiteEntry> entries);

/// Runs every registry objective and attaches the PNG table.
SuiteReport run_suite(const RmConfig& config, std::size_t replicates, std::uint64_t base_seed,
                      std::size_t threads = 0);

struct GridOracleResult {
  Point point;
  double value = 0.0;
  std::uint64_t evaluated = 0;
};

inline constexpr std::uint64_t kMaxGridPoints = 100'000'000;

/// Exhaustive noise-free search over lower_i + k * resolution <= upper_i.
/// Ties go to the lexicographically first grid point. Throws UsageError when
/// the grid exceeds kMaxGridPoints or resolution <= 0.
GridOracleResult grid_oracle(const ObjectiveSpec& spec, double resolution);

enum class ReachMode {
  /// Every point the move set can reach, improving or not.
  Any,
  /// Only points reachable through strictly improving moves.
  Improving,
};

struct ReachabilityResult {
  Point start;
  std::uint64_t visited = 0;
  bool partial = false;  // budget exhausted before the frontier emptied
  bool optimum_reachable = false;
  Point best_point;
  double best_value = 0.0;
};

inline constexpr std::size_t kMaxReachDimension = 3;

/// Breadth-first closure from the elite corner under moves s + L * e with
/// L in {rms * n} and the beta schedule and e any sign vector, staying in the
/// domain. Stops after `budget` distinct points.
ReachabilityResult reachability_oracle(const ObjectiveSpec& spec, const RmConfig& config,
                                       std::uint64_t budget, ReachMode mode = ReachMode::Any);

}  // namespace rmga
