#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmga/objectives.hpp"
#include "rmga/types.hpp"

namespace rmga {

enum class StallPolicy { StopOnNoImprovement };

/// Tunables of the rotational-mutation search. Step lengths are absolute
/// problem units.
struct RmConfig {
  /// Base step (RMS); directed probes try rms * n for n in alpha_multipliers.
  double rms = 0.1;
  std::vector<int> alpha_multipliers{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  /// Rotational step lengths, tried in order.
  std::vector<double> beta_schedule{0.1, 0.25, 0.5, 0.75, 1.0};
  std::uint64_t max_generations = 100000;
  std::size_t vertex_cap = 64;
  std::size_t direction_cap = 64;
  std::uint64_t seed = 0;
  StallPolicy stall_policy = StallPolicy::StopOnNoImprovement;

  /// Throws ConfigError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const RmConfig&, const RmConfig&) = default;
};

enum class EventKind { EliteSelected, DirectedStep, RotationalStep, Stalled, BoundaryStop };
enum class Termination { Stalled, BoundaryStop, GenerationCap };

std::string to_string(EventKind kind);
std::string to_string(Termination kind);

struct TraceEvent {
  std::uint64_t generation = 0;
  EventKind kind = EventKind::EliteSelected;
  Point point;
  double value = 0.0;
  std::optional<SignVector> direction;
  std::optional<double> step;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

using Trace = std::vector<TraceEvent>;

struct RunResult {
  Point best_point;
  /// BP. Noise-free score of best_point (noisy objectives are rescored).
  double best_value = 0.0;
  /// Accepted mutations (generations).
  std::uint64_t trm = 0;
  Termination terminated_by = Termination::Stalled;
  std::optional<Trace> trace;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Objective plus the noise stream a run evaluates it with. Counts evaluations.
class Evaluator {
 public:
  explicit Evaluator(const ObjectiveSpec& spec, NoiseSource* noise = nullptr)
      : spec_(&spec), noise_(noise) {}

  double operator()(const Point& p) {
    ++count_;
    return eval(*spec_, p, noise_);
  }

  [[nodiscard]] const ObjectiveSpec& spec() const noexcept { return *spec_; }
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }

 private:
  const ObjectiveSpec* spec_;
  NoiseSource* noise_;
  std::uint64_t count_ = 0;
};

/// Coordinates produced by step_along are rounded to this absolute lattice so
/// repeated decimal steps land exactly on decimal targets.
inline constexpr double kCoordinateLattice = 1e-9;

struct Move {
  Point point;
  double value = 0.0;
  SignVector direction;
  double step = 0.0;
};

/// Best-fitness candidate; ties go to the lexicographically smallest point.
/// Throws UsageError on an empty list.
std::pair<Point, double> select_elite(std::span<const Point> candidates, Evaluator& evaluate);
std::pair<Point, double> select_elite(std::span<const Point> candidates,
                                      const ObjectiveSpec& spec);

/// s + length * direction, rounded to kCoordinateLattice. No clamping.
Point step_along(const Point& s, const SignVector& direction, double length);

/// First in-domain point s + rms*n*direction (n ascending) that beats s_value.
std::optional<Move> directed_probe(const Point& s, double s_value, const SignVector& direction,
                                   Evaluator& evaluate, const RmConfig& config);

/// First improving in-domain s + beta*e, beta over the schedule (outer loop) and
/// e over `directions` in the given order (inner loop).
std::optional<Move> rotational_search(const Point& s, double s_value, Evaluator& evaluate,
                                      const RmConfig& config,
                                      std::span<const SignVector> directions);

/// Runs the rotational-mutation search from the best box corner until no
/// candidate improves or the generation cap is reached.
RunResult rm_optimize(const ObjectiveSpec& spec, const RmConfig& config, bool trace_enabled);

/// The same search read as a GA with elitism: population = box corners,
/// one generation = one accepted mutation. Always records the trace and
/// returns exactly what rm_optimize(spec, config, true) returns.
RunResult rmga_run(const ObjectiveSpec& spec, const RmConfig& config);

/// Independent seed for a named substream of a run seed (splitmix64).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace rmga
