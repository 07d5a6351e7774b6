#include "rmga/types.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <set>

#include <fmt/core.h>

namespace rmga {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw UsageError(fmt::format("{} has a non-finite coordinate", what));
    }
  }
}

// A corner/sign pattern of n bits packed into 64-bit words. Bit value 0 means
// "lower bound" for corners and "+1" for sign vectors.
using Pattern = std::vector<std::uint64_t>;

bool bit(const Pattern& pattern, std::size_t k) {
  return ((pattern[k / 64] >> (k % 64)) & 1U) != 0;
}

// Enumerates 0 .. 2^n - 1 with the first coordinate as the most significant bit.
std::vector<Pattern> enumerate_patterns(std::size_t n) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<Pattern> out;
  out.reserve(count);
  for (std::size_t index = 0; index < count; ++index) {
    Pattern p(1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if ((index >> (n - 1 - k)) & 1U) p[0] |= std::uint64_t{1} << k;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pattern> sample_patterns(std::size_t n, std::size_t cap, Rng& rng) {
  const std::size_t words = (n + 63) / 64;
  std::set<Pattern> seen;
  std::vector<Pattern> out;
  out.reserve(cap);
  while (out.size() < cap) {
    Pattern p(words);
    for (std::size_t w = 0; w < words; ++w) {
      p[w] = rng();
      const std::size_t used = std::min<std::size_t>(64, n - w * 64);
      if (used < 64) p[w] &= (std::uint64_t{1} << used) - 1;
    }
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

bool fits_cap(std::size_t n, std::size_t cap) {
  return n < std::numeric_limits<std::size_t>::digits - 1 && (std::size_t{1} << n) <= cap;
}

std::vector<Pattern> patterns(std::size_t n, std::size_t cap, Rng& rng) {
  if (cap == 0) throw UsageError("cap must be at least 1");
  if (n == 0) throw UsageError("dimension must be positive");
  return fits_cap(n, cap) ? enumerate_patterns(n) : sample_patterns(n, cap, rng);
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  require_finite(coords_, "point");
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

BoxDomain::BoxDomain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw UsageError("domain dimension must be positive");
  if (lower_.size() != upper_.size()) {
    throw UsageError("domain bounds have different lengths");
  }
  require_finite(lower_, "domain lower bound");
  require_finite(upper_, "domain upper bound");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i])) {
      throw UsageError(fmt::format("domain bound {} is empty: [{}, {}]", i, lower_[i], upper_[i]));
    }
  }
}

BoxDomain BoxDomain::cube(std::size_t dimension, double half_width) {
  return {std::vector<double>(dimension, -half_width), std::vector<double>(dimension, half_width)};
}

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw UsageError("sign vector must be non-empty");
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw UsageError("sign vector entries must be -1 or +1");
  }
}

SignVector::SignVector(std::initializer_list<int> signs)
    : SignVector(std::vector<std::int8_t>(signs.begin(), signs.end())) {}

bool contains(const BoxDomain& domain, const Point& p) {
  if (p.size() != domain.dimension()) {
    throw UsageError(fmt::format("point has dimension {}, domain has {}", p.size(),
                                 domain.dimension()));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < domain.lower()[i] || p[i] > domain.upper()[i]) return false;
  }
  return true;
}

std::vector<Point> vertices(const BoxDomain& domain, std::size_t cap, Rng& rng) {
  const std::size_t n = domain.dimension();
  std::vector<Point> out;
  for (const auto& pattern : patterns(n, cap, rng)) {
    std::vector<double> coords(n);
    for (std::size_t k = 0; k < n; ++k) {
      coords[k] = bit(pattern, k) ? domain.upper()[k] : domain.lower()[k];
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::vector<SignVector> all_sign_vectors(std::size_t dimension, std::size_t cap, Rng& rng) {
  std::vector<SignVector> out;
  for (const auto& pattern : patterns(dimension, cap, rng)) {
    std::vector<std::int8_t> signs(dimension);
    for (std::size_t k = 0; k < dimension; ++k) signs[k] = bit(pattern, k) ? -1 : 1;
    out.emplace_back(std::move(signs));
  }
  return out;
}

SignVector inward_direction(const BoxDomain& domain, const Point& corner) {
  if (corner.size() != domain.dimension()) throw UsageError("corner dimension mismatch");
  std::vector<std::int8_t> signs(corner.size());
  for (std::size_t i = 0; i < corner.size(); ++i) {
    signs[i] = corner[i] == domain.lower()[i] ? 1 : -1;
  }
  return SignVector(std::move(signs));
}

std::string to_string(Sense sense) {
  return sense == Sense::Minimize ? "minimize" : "maximize";
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i > 0 ? ", " : "") << p[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const SignVector& s) {
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i > 0 ? ", " : "") << (s[i] > 0 ? "+1" : "-1");
  return os << ')';
}

}  // namespace rmga
