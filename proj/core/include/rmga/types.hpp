#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmga {

/// Raised when arguments violate a documented precondition (caller bug).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a point is evaluated outside its objective's domain.
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for inconsistent configuration (bad RmConfig, missing noise source, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Rng = std::mt19937_64;

/// A decision vector. Every coordinate is finite.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic order over the coordinate sequence.
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<double> coords_;
};

/// Axis-aligned box lower_i <= x_i <= upper_i with lower_i < upper_i.
class BoxDomain {
 public:
  BoxDomain(std::vector<double> lower, std::vector<double> upper);
  /// The symmetric cube [-half_width, half_width]^dimension.
  static BoxDomain cube(std::size_t dimension, double half_width);

  [[nodiscard]] std::size_t dimension() const noexcept { return lower_.size(); }
  [[nodiscard]] std::span<const double> lower() const noexcept { return lower_; }
  [[nodiscard]] std::span<const double> upper() const noexcept { return upper_; }

  friend bool operator==(const BoxDomain&, const BoxDomain&) = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// A diagonal direction in {-1, +1}^n.
class SignVector {
 public:
  explicit SignVector(std::vector<std::int8_t> signs);
  SignVector(std::initializer_list<int> signs);

  [[nodiscard]] std::size_t size() const noexcept { return signs_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return signs_[i]; }
  [[nodiscard]] std::span<const std::int8_t> signs() const noexcept { return signs_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

enum class Sense { Minimize, Maximize };

/// Strict comparison under an optimization sense: for Minimize, a is better iff a < b.
[[nodiscard]] constexpr bool better(Sense sense, double a, double b) noexcept {
  return sense == Sense::Minimize ? a < b : a > b;
}

struct Fitness {
  double value = 0.0;
  Sense sense = Sense::Minimize;

  [[nodiscard]] constexpr bool better_than(const Fitness& other) const noexcept {
    return better(sense, value, other.value);
  }
};

/// Closed-box membership. Throws UsageError on dimension mismatch.
[[nodiscard]] bool contains(const BoxDomain& domain, const Point& p);

/// Corners of the box. All 2^n corners in lexicographic order (lower before upper,
/// first coordinate most significant) when 2^n <= cap; otherwise `cap` distinct
/// corners drawn uniformly without replacement, in draw order.
[[nodiscard]] std::vector<Point> vertices(const BoxDomain& domain, std::size_t cap, Rng& rng);

/// Sign vectors of length n. Full enumeration (+1 before -1, all +1 first) when
/// 2^n <= cap; otherwise `cap` distinct vectors sampled without replacement.
[[nodiscard]] std::vector<SignVector> all_sign_vectors(std::size_t dimension, std::size_t cap,
                                                       Rng& rng);

/// The sign vector that points from a corner of `domain` into its interior:
/// +1 where the corner sits on the lower bound, -1 otherwise.
[[nodiscard]] SignVector inward_direction(const BoxDomain& domain, const Point& corner);

std::string to_string(Sense sense);

std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const SignVector& s);

}  // namespace rmga
