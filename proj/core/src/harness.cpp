#include "rmga/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <deque>
#include <exception>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_set>

#include <fmt/core.h>

namespace rmga {

std::vector<RunReport> run_replicates(const ObjectiveSpec& spec, const RmConfig& config,
                                      std::size_t replicates, std::uint64_t base_seed,
                                      std::size_t threads) {
  if (replicates == 0) throw UsageError("replicates must be at least 1");
  config.validate();

  std::vector<RunReport> reports(replicates);
  std::vector<std::exception_ptr> errors(replicates);
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t i = next++; i < replicates; i = next++) {
      try {
        RmConfig local = config;
        local.seed = base_seed + i;
        const auto start = std::chrono::steady_clock::now();
        RunResult result = rmga_run(spec, local);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        reports[i] = RunReport{spec.name,         local.rms,   result.trm,
                               result.best_point, result.best_value,
                               local.seed,        elapsed.count(), result.terminated_by};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, replicates);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return reports;
}

AggregateStats aggregate(std::span<const RunReport> reports) {
  if (reports.empty()) throw UsageError("aggregate needs at least one report");
  // Sorted summation keeps the result independent of report order.
  std::vector<double> bps;
  std::vector<std::uint64_t> trms;
  for (const auto& r : reports) {
    bps.push_back(r.bp);
    trms.push_back(r.trm);
  }
  std::sort(bps.begin(), bps.end());
  std::sort(trms.begin(), trms.end());

  const auto n = static_cast<double>(reports.size());
  double sum = 0.0;
  for (double v : bps) sum += v;
  const double mean = sum / n;
  double sq = 0.0;
  for (double v : bps) sq += (v - mean) * (v - mean);

  double trm_sum = 0.0;
  for (auto t : trms) trm_sum += static_cast<double>(t);

  AggregateStats stats;
  stats.runs = reports.size();
  stats.mean_bp = mean;
  stats.sd_bp = std::sqrt(sq / n);
  stats.min_bp = bps.front();
  stats.mean_trm = trm_sum / n;
  stats.min_trm = trms.front();
  stats.max_trm = trms.back();
  return stats;
}

SuiteEntry make_entry(const ObjectiveSpec& spec, std::vector<RunReport> runs) {
  SuiteEntry entry{spec.name, spec.noisy, std::move(runs), {}};
  entry.stats = aggregate(entry.runs);
  return entry;
}

PngTable compute_png(std::span<const SuiteEntry> entries) {
  PngTable table;
  for (std::size_t k = 0; k < kDeJongNames.size(); ++k) {
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [&](const SuiteEntry& e) { return e.function == kDeJongNames[k]; });
    if (it == entries.end()) continue;
    table.measured_trm[k] = it->stats.mean_trm;
    if (it->stats.mean_trm > 0.0) table.ratio[k] = kDeGenerations[k] / it->stats.mean_trm;
  }
  return table;
}

SuiteReport run_suite(const RmConfig& config, std::size_t replicates, std::uint64_t base_seed,
                      std::size_t threads) {
  SuiteReport report;
  report.metadata = SuiteMetadata{base_seed, replicates, config, std::nullopt};
  for (const auto& spec : registry()) {
    report.entries.push_back(
        make_entry(spec, run_replicates(spec, config, replicates, base_seed, threads)));
  }
  report.png = compute_png(report.entries);
  return report;
}

GridOracleResult grid_oracle(const ObjectiveSpec& spec, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw UsageError("grid resolution must be positive");
  }
  const std::size_t n = spec.dimension();
  const auto lower = spec.domain.lower();
  const auto upper = spec.domain.upper();

  // Per-axis grid values, snapped like optimizer steps so decimal targets are exact.
  std::vector<std::vector<double>> axes(n);
  double total = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double span = upper[i] - lower[i];
    const auto count = static_cast<std::uint64_t>(std::floor(span / resolution + 1e-9)) + 1;
    total *= static_cast<double>(count);
    if (total > static_cast<double>(kMaxGridPoints)) {
      throw UsageError(fmt::format("grid for {} at resolution {} exceeds {} points", spec.name,
                                   resolution, kMaxGridPoints));
    }
    for (std::uint64_t k = 0; k < count; ++k) {
      const double v = std::round((lower[i] + static_cast<double>(k) * resolution) * 1e9) / 1e9;
      axes[i].push_back(std::min(v, upper[i]));
    }
  }

  GridOracleResult best{Point(), 0.0, 0};
  std::vector<std::size_t> index(n, 0);
  std::vector<double> coords(n);
  bool have_best = false;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) coords[i] = axes[i][index[i]];
    const double v = spec.formula(coords, nullptr);
    ++best.evaluated;
    if (!have_best || better(spec.sense, v, best.value)) {
      best.point = Point(coords);
      best.value = v;
      have_best = true;
    }
    // Odometer with the last coordinate fastest: lexicographic visiting order.
    std::size_t axis = n;
    while (axis > 0) {
      --axis;
      if (++index[axis] < axes[axis].size()) break;
      index[axis] = 0;
      if (axis == 0) return best;
    }
  }
}

namespace {

// Points are tracked as integer multiples of kCoordinateLattice. step_along
// snaps to the same lattice, so k / 1e9 is exactly the double it would produce.
using LatticeKey = std::array<std::int64_t, kMaxReachDimension>;

struct LatticeKeyHash {
  std::size_t operator()(const LatticeKey& key) const noexcept {
    // Lattice indices are multiples of large powers of ten; mix them properly.
    std::uint64_t h = 0;
    for (auto v : key) {
      h = (h ^ static_cast<std::uint64_t>(v)) + 0x9e3779b97f4a7c15ULL;
      h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
      h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};

constexpr double kLatticeScale = 1e9;

std::int64_t to_lattice(double v) { return std::llround(v * kLatticeScale); }
double from_lattice(std::int64_t k) { return static_cast<double>(k) / kLatticeScale; }

LatticeKey lattice_key(const Point& p) {
  LatticeKey key{};
  for (std::size_t i = 0; i < p.size(); ++i) key[i] = to_lattice(p[i]);
  return key;
}

// Visited set for the BFS. Every reachable point is start + g * m with g the gcd
// of the step lengths, so a bitset over that sub-grid is used when it is small
// enough; a hash set covers the rest.
class VisitedSet {
 public:
  VisitedSet(const BoxDomain& domain, const LatticeKey& start, std::int64_t g)
      : start_(start), g_(g), n_(domain.dimension()) {
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      below_[i] = (start[i] - to_lattice(domain.lower()[i])) / g;
      extent_[i] = below_[i] + (to_lattice(domain.upper()[i]) - start[i]) / g + 1;
      if (cells > kDenseLimit / static_cast<std::uint64_t>(extent_[i])) {
        cells = kDenseLimit + 1;
        break;
      }
      cells *= static_cast<std::uint64_t>(extent_[i]);
    }
    if (cells <= kDenseLimit) dense_.assign(cells, false);
  }

  bool contains(const LatticeKey& k) const {
    if (dense_.empty()) return sparse_.contains(k);
    const auto idx = index(k);
    return idx && dense_[*idx];
  }

  void insert(const LatticeKey& k) {
    if (dense_.empty()) {
      sparse_.insert(k);
    } else if (const auto idx = index(k)) {
      dense_[*idx] = true;
    }
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 28;  // 32 MiB of bits

  std::optional<std::uint64_t> index(const LatticeKey& k) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::int64_t d = k[i] - start_[i];
      if (d % g_ != 0) return std::nullopt;
      const std::int64_t m = d / g_ + below_[i];
      if (m < 0 || m >= extent_[i]) return std::nullopt;
      idx = idx * static_cast<std::uint64_t>(extent_[i]) + static_cast<std::uint64_t>(m);
    }
    return idx;
  }

  LatticeKey start_;
  std::int64_t g_;
  std::size_t n_;
  LatticeKey below_{};
  LatticeKey extent_{};
  std::vector<bool> dense_;
  std::unordered_set<LatticeKey, LatticeKeyHash> sparse_;
};

}  // namespace

ReachabilityResult reachability_oracle(const ObjectiveSpec& spec, const RmConfig& config,
                                       std::uint64_t budget, ReachMode mode) {
  const std::size_t n = spec.dimension();
  if (n > kMaxReachDimension) {
    throw UsageError(fmt::format("reachability oracle supports at most {} dimensions",
                                 kMaxReachDimension));
  }
  if (budget == 0) throw UsageError("budget must be positive");
  config.validate();

  Rng rng(stream_seed(config.seed, 0));
  const auto corners = vertices(spec.domain, config.vertex_cap, rng);
  const auto [start, start_value] = select_elite(corners, spec);
  const auto directions = all_sign_vectors(n, std::size_t{1} << n, rng);

  std::vector<std::int64_t> steps;
  for (int m : config.alpha_multipliers) steps.push_back(to_lattice(config.rms * m));
  for (double beta : config.beta_schedule) steps.push_back(to_lattice(beta));

  ReachabilityResult result{start, 0, false, false, start, start_value};
  LatticeKey best_key = lattice_key(start);
  std::int64_t g = 0;
  for (std::int64_t step : steps) g = std::gcd(g, step);
  VisitedSet seen(spec.domain, best_key, g);
  std::deque<std::pair<LatticeKey, double>> frontier;
  seen.insert(best_key);
  frontier.emplace_back(best_key, start_value);
  result.visited = 1;

  std::array<double, kMaxReachDimension> x{};
  const std::span<const double> coords(x.data(), n);
  while (!frontier.empty() && !result.partial) {
    const auto [s, s_value] = frontier.front();
    frontier.pop_front();
    for (std::int64_t step : steps) {
      for (const auto& e : directions) {
        LatticeKey k = s;
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) {
          k[i] += e[i] * step;
          x[i] = from_lattice(k[i]);
          inside = x[i] >= spec.domain.lower()[i] && x[i] <= spec.domain.upper()[i];
        }
        if (!inside || seen.contains(k)) continue;
        const double v = spec.formula(coords, nullptr);
        if (mode == ReachMode::Improving && !better(spec.sense, v, s_value)) continue;
        seen.insert(k);
        ++result.visited;
        if (better(spec.sense, v, result.best_value) || (v == result.best_value && k < best_key)) {
          best_key = k;
          result.best_value = v;
        }
        frontier.emplace_back(k, v);
        if (result.visited >= budget) {
          result.partial = true;
          break;
        }
      }
      if (result.partial) break;
    }
  }

  std::vector<double> best(n);
  for (std::size_t i = 0; i < n; ++i) best[i] = from_lattice(best_key[i]);
  result.best_point = Point(std::move(best));
  if (spec.known_optimum) {
    result.optimum_reachable = seen.contains(lattice_key(spec.known_optimum->point));
  }
  return result;
}

}  // namespace rmga
