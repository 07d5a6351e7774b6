#include "rmga/objectives.hpp"

#include <cmath>

#include <fmt/core.h>

namespace rmga {

NoiseSource::NoiseSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

// Marsaglia polar method on 53-bit uniforms.
double NoiseSource::next() {
  ++position_;
  if (spare_) {
    const double out = *spare_;
    spare_.reset();
    return out;
  }
  const auto uniform = [this] {
    return 2.0 * static_cast<double>(engine_() >> 11) * 0x1.0p-53 - 1.0;
  };
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = uniform();
    v = uniform();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  return u * scale;
}

void NoiseSource::reset() {
  engine_.seed(seed_);
  position_ = 0;
  spare_.reset();
}

namespace {

double sphere(std::span<const double> x, NoiseSource*) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double rosenbrock(std::span<const double> x, NoiseSource*) {
  const double a = x[0] * x[0] - x[1];
  const double b = 1.0 - x[0];
  return 100.0 * a * a + b * b;
}

double step(std::span<const double> x, NoiseSource*) {
  double sum = 30.0;
  for (double v : x) sum += std::floor(v);
  return sum;
}

double noisy_quartic(std::span<const double> x, NoiseSource* noise) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double sq = x[i] * x[i];
    sum += static_cast<double>(i + 1) * sq * sq;
    if (noise != nullptr) sum += noise->next();
  }
  return sum;
}

double foxholes(std::span<const double> x, NoiseSource*) {
  const auto& a = foxhole_table();
  double sum = 0.002;
  for (std::size_t j = 0; j < 25; ++j) {
    double inner = static_cast<double>(j + 1);
    for (std::size_t i = 0; i < 2; ++i) inner += std::pow(x[i] - a[i][j], 6);
    sum += 1.0 / inner;
  }
  return 1.0 / sum;
}

double beale(std::span<const double> x, NoiseSource*) {
  const double a = x[0];
  const double b = x[1];
  const double t1 = 1.5 - a + a * b;
  const double t2 = 2.25 - a + a * b * b;
  const double t3 = 2.625 - a + a * b * b * b;
  return t1 * t1 + t2 * t2 + t3 * t3;
}

double shifted_quadratic(std::span<const double> x, NoiseSource*) {
  const double d = x[1] - 0.4;
  return x[0] * x[0] + d * d;
}

ObjectiveSpec make(std::string name, std::size_t dim, double half_width, Formula formula,
                   Point optimum, bool noisy = false) {
  ObjectiveSpec spec{std::move(name), BoxDomain::cube(dim, half_width), Sense::Minimize,
                     std::nullopt, noisy, std::move(formula)};
  const double value = spec.formula(optimum.coords(), nullptr);
  spec.known_optimum = KnownOptimum{std::move(optimum), value};
  return spec;
}

std::vector<ObjectiveSpec> build_registry() {
  std::vector<ObjectiveSpec> specs;
  specs.push_back(make("f1", 3, 5.12, sphere, Point{0.0, 0.0, 0.0}));
  specs.push_back(make("f2", 2, 2.048, rosenbrock, Point{1.0, 1.0}));
  specs.push_back(make("f3", 5, 5.12, step, Point(std::vector<double>(5, -5.12))));
  specs.push_back(
      make("f4", 30, 1.28, noisy_quartic, Point(std::vector<double>(30, 0.0)), true));
  // Known value is the formula at the first foxhole (~0.998004), not a published constant.
  specs.push_back(make("f5", 2, 65.536, foxholes, Point{-32.0, -32.0}));
  specs.push_back(make("beale", 2, 4.5, beale, Point{3.0, 0.5}));
  specs.push_back(make("quad", 2, 2.0, shifted_quadratic, Point{0.0, 0.4}));
  return specs;
}

}  // namespace

double eval(const ObjectiveSpec& spec, const Point& p, NoiseSource* noise) {
  if (!contains(spec.domain, p)) {
    throw DomainViolation(fmt::format("point outside the domain of {}", spec.name));
  }
  if (spec.noisy && noise == nullptr) {
    throw ConfigError(fmt::format("{} is noisy and needs a noise source", spec.name));
  }
  return spec.formula(p.coords(), spec.noisy ? noise : nullptr);
}

double eval_noise_free(const ObjectiveSpec& spec, const Point& p) {
  if (!contains(spec.domain, p)) {
    throw DomainViolation(fmt::format("point outside the domain of {}", spec.name));
  }
  return spec.formula(p.coords(), nullptr);
}

const std::array<std::array<double, 25>, 2>& foxhole_table() {
  static const auto table = [] {
    constexpr std::array<double, 5> centers{-32.0, -16.0, 0.0, 16.0, 32.0};
    std::array<std::array<double, 25>, 2> a{};
    for (std::size_t j = 0; j < 25; ++j) {
      a[0][j] = centers[j % 5];
      a[1][j] = centers[j / 5];
    }
    return a;
  }();
  return table;
}

const std::vector<ObjectiveSpec>& registry() {
  static const std::vector<ObjectiveSpec> specs = build_registry();
  return specs;
}

const ObjectiveSpec& find_objective(std::string_view name) {
  for (const auto& spec : registry()) {
    if (spec.name == name) return spec;
  }
  throw UsageError(fmt::format("unknown objective '{}'", name));
}

std::vector<std::string> objective_names() {
  std::vector<std::string> names;
  for (const auto& spec : registry()) names.push_back(spec.name);
  return names;
}

}  // namespace rmga
