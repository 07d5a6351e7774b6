#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmga/types.hpp"

namespace rmga {

/// Seeded standard-normal stream. The sequence depends only on the seed, on
/// every platform (no std::normal_distribution).
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed);

  double next();
  void reset();

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  /// Number of samples drawn since construction or the last reset.
  [[nodiscard]] std::uint64_t position() const noexcept { return position_; }

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  Rng engine_;
  std::optional<double> spare_;
};

/// Objective formula. `noise` is null for noise-free evaluation; noisy formulas
/// then drop their noise terms.
using Formula = std::function<double(std::span<const double> x, NoiseSource* noise)>;

struct KnownOptimum {
  Point point;
  double value = 0.0;
};

struct ObjectiveSpec {
  std::string name;
  BoxDomain domain;
  Sense sense = Sense::Minimize;
  std::optional<KnownOptimum> known_optimum;
  bool noisy = false;
  Formula formula;

  [[nodiscard]] std::size_t dimension() const noexcept { return domain.dimension(); }
};

/// Evaluates the objective at `p`. Noisy specs require a noise source and
/// consume one draw per noise term; noise-free specs ignore it.
/// Throws DomainViolation for points outside the domain and ConfigError for a
/// noisy spec without a noise source.
double eval(const ObjectiveSpec& spec, const Point& p, NoiseSource* noise = nullptr);

/// Evaluates with every noise term replaced by zero.
double eval_noise_free(const ObjectiveSpec& spec, const Point& p);

/// The 2x25 Shekel foxhole centers: row 0 cycles (-32,-16,0,16,32), row 1
/// holds each of those values five times in a row.
const std::array<std::array<double, 25>, 2>& foxhole_table();

/// f1..f5 (De Jong suite), beale, quad, in that order.
const std::vector<ObjectiveSpec>& registry();

/// Looks up a registry entry by its CLI identifier. Throws UsageError if unknown.
const ObjectiveSpec& find_objective(std::string_view name);

std::vector<std::string> objective_names();

}  // namespace rmga
