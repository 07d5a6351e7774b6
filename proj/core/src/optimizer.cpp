#include "rmga/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace rmga {

namespace {

constexpr std::uint64_t kVertexStream = 0;
constexpr std::uint64_t kNoiseStream = 1;

// Rounds to the nearest multiple of kCoordinateLattice. Dividing by the integer
// scale (rather than multiplying by 1e-9) yields the double nearest the decimal.
double snap(double v) {
  constexpr double scale = 1e9;  // 1 / kCoordinateLattice, exact
  if (std::abs(v) >= 1e6) return v;
  return std::round(v * scale) / scale;
}

// False only when every directed and rotational candidate leaves the box.
bool any_candidate_inside(const Point& s, const BoxDomain& domain, const RmConfig& config,
                          const SignVector& direction, std::span<const SignVector> directions) {
  for (int n : config.alpha_multipliers) {
    if (contains(domain, step_along(s, direction, config.rms * n))) return true;
  }
  for (double beta : config.beta_schedule) {
    for (const auto& e : directions) {
      if (contains(domain, step_along(s, e, beta))) return true;
    }
  }
  return false;
}

}  // namespace

void RmConfig::validate() const {
  if (!(rms > 0.0) || !std::isfinite(rms)) throw ConfigError("rms must be a positive number");
  if (alpha_multipliers.empty()) throw ConfigError("alpha multipliers must be non-empty");
  for (std::size_t i = 0; i < alpha_multipliers.size(); ++i) {
    if (alpha_multipliers[i] <= 0) throw ConfigError("alpha multipliers must be positive");
    if (i > 0 && alpha_multipliers[i] <= alpha_multipliers[i - 1]) {
      throw ConfigError("alpha multipliers must be strictly ascending");
    }
  }
  if (beta_schedule.empty()) throw ConfigError("beta schedule must be non-empty");
  for (std::size_t i = 0; i < beta_schedule.size(); ++i) {
    if (!(beta_schedule[i] > 0.0) || !std::isfinite(beta_schedule[i])) {
      throw ConfigError("beta schedule entries must be positive");
    }
    if (i > 0 && beta_schedule[i] <= beta_schedule[i - 1]) {
      throw ConfigError("beta schedule must be strictly ascending");
    }
  }
  if (max_generations == 0) throw ConfigError("max_generations must be positive");
  if (vertex_cap == 0 || direction_cap == 0) throw ConfigError("caps must be positive");
}

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::EliteSelected: return "elite";
    case EventKind::DirectedStep: return "directed";
    case EventKind::RotationalStep: return "rotational";
    case EventKind::Stalled: return "stalled";
    case EventKind::BoundaryStop: return "boundary";
  }
  return "unknown";
}

std::string to_string(Termination kind) {
  switch (kind) {
    case Termination::Stalled: return "stalled";
    case Termination::BoundaryStop: return "boundary";
    case Termination::GenerationCap: return "generation_cap";
  }
  return "unknown";
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::pair<Point, double> select_elite(std::span<const Point> candidates, Evaluator& evaluate) {
  if (candidates.empty()) throw UsageError("select_elite needs at least one candidate");
  const Sense sense = evaluate.spec().sense;
  std::size_t best = 0;
  double best_value = evaluate(candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double v = evaluate(candidates[i]);
    if (better(sense, v, best_value) || (v == best_value && candidates[i] < candidates[best])) {
      best = i;
      best_value = v;
    }
  }
  return {candidates[best], best_value};
}

std::pair<Point, double> select_elite(std::span<const Point> candidates,
                                      const ObjectiveSpec& spec) {
  Evaluator evaluate(spec);
  return select_elite(candidates, evaluate);
}

Point step_along(const Point& s, const SignVector& direction, double length) {
  if (s.size() != direction.size()) throw UsageError("direction dimension mismatch");
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = snap(s[i] + length * direction[i]);
  return Point(std::move(out));
}

std::optional<Move> directed_probe(const Point& s, double s_value, const SignVector& direction,
                                   Evaluator& evaluate, const RmConfig& config) {
  const auto& spec = evaluate.spec();
  for (int n : config.alpha_multipliers) {
    const double length = config.rms * n;
    Point p = step_along(s, direction, length);
    if (!contains(spec.domain, p)) continue;
    const double v = evaluate(p);
    if (better(spec.sense, v, s_value)) return Move{std::move(p), v, direction, length};
  }
  return std::nullopt;
}

std::optional<Move> rotational_search(const Point& s, double s_value, Evaluator& evaluate,
                                      const RmConfig& config,
                                      std::span<const SignVector> directions) {
  if (directions.empty()) throw UsageError("rotational_search needs at least one direction");
  const auto& spec = evaluate.spec();
  for (double beta : config.beta_schedule) {
    for (const auto& e : directions) {
      Point p = step_along(s, e, beta);
      if (!contains(spec.domain, p)) continue;
      const double v = evaluate(p);
      if (better(spec.sense, v, s_value)) return Move{std::move(p), v, e, beta};
    }
  }
  return std::nullopt;
}

RunResult rm_optimize(const ObjectiveSpec& spec, const RmConfig& config, bool trace_enabled) {
  config.validate();
  Rng rng(stream_seed(config.seed, kVertexStream));
  NoiseSource noise(stream_seed(config.seed, kNoiseStream));
  Evaluator evaluate(spec, spec.noisy ? &noise : nullptr);

  std::optional<Trace> trace;
  if (trace_enabled) trace.emplace();
  const auto record = [&](std::uint64_t generation, EventKind kind, const Point& p, double value,
                          std::optional<SignVector> direction, std::optional<double> step) {
    if (trace) trace->push_back({generation, kind, p, value, std::move(direction), step});
  };

  const auto corners = vertices(spec.domain, config.vertex_cap, rng);
  auto [current, current_value] = select_elite(corners, evaluate);
  SignVector direction = inward_direction(spec.domain, current);
  const auto directions = all_sign_vectors(spec.dimension(), config.direction_cap, rng);
  record(0, EventKind::EliteSelected, current, current_value, direction, std::nullopt);

  std::uint64_t trm = 0;
  Termination terminated_by = Termination::GenerationCap;
  while (trm < config.max_generations) {
    if (auto move = directed_probe(current, current_value, direction, evaluate, config)) {
      ++trm;
      current = std::move(move->point);
      current_value = move->value;
      record(trm, EventKind::DirectedStep, current, current_value, direction, move->step);
      continue;
    }
    if (auto move = rotational_search(current, current_value, evaluate, config, directions)) {
      ++trm;
      current = std::move(move->point);
      current_value = move->value;
      direction = move->direction;
      record(trm, EventKind::RotationalStep, current, current_value, direction, move->step);
      continue;
    }
    if (any_candidate_inside(current, spec.domain, config, direction, directions)) {
      terminated_by = Termination::Stalled;
      record(trm, EventKind::Stalled, current, current_value, std::nullopt, std::nullopt);
    } else {
      terminated_by = Termination::BoundaryStop;
      record(trm, EventKind::BoundaryStop, current, current_value, std::nullopt, std::nullopt);
    }
    break;
  }

  RunResult result;
  result.best_value = spec.noisy ? eval_noise_free(spec, current) : current_value;
  result.best_point = std::move(current);
  result.trm = trm;
  result.terminated_by = terminated_by;
  result.trace = std::move(trace);
  result.seed = config.seed;
  result.evaluations = evaluate.count();
  return result;
}

RunResult rmga_run(const ObjectiveSpec& spec, const RmConfig& config) {
  return rm_optimize(spec, config, true);
}

}  // namespace rmga
