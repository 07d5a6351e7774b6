#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "rmga/harness.hpp"
#include "rmga/objectives.hpp"
#include "rmga/optimizer.hpp"
#include "rmga/report.hpp"

namespace rmga::cli {

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> values;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    T value{};
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw UsageError(fmt::format("--{}: '{}' is not a valid number list", flag, text));
    }
    values.push_back(value);
    begin = end + 1;
  }
  return values;
}

struct Options {
  std::string function;
  std::uint64_t seed = 0;
  double rms = 0.1;
  std::string beta = "0.1,0.25,0.5,0.75,1.0";
  std::string alphas = "1,2,3,4,5,6,7,8,9,10";
  std::size_t replicates = 1;
  std::uint64_t max_generations = 100000;
  std::size_t vertex_cap = 64;
  std::size_t direction_cap = 64;
  std::string output = "text";
  std::string out_file;
  double resolution = 0.05;
  std::string oracle_kind = "grid";
  std::uint64_t budget = 2'000'000;
  bool improving_only = false;
  std::size_t threads = 0;
  bool timing = false;
};

RmConfig make_config(const Options& o) {
  RmConfig config;
  config.rms = o.rms;
  config.beta_schedule = parse_list<double>(o.beta, "beta");
  config.alpha_multipliers = parse_list<int>(o.alphas, "alphas");
  config.max_generations = o.max_generations;
  config.vertex_cap = o.vertex_cap;
  config.direction_cap = o.direction_cap;
  config.seed = o.seed;
  config.validate();
  return config;
}

const ObjectiveSpec& require_function(const Options& o, const char* subcommand) {
  if (o.function.empty()) {
    throw UsageError(fmt::format("{} requires --function", subcommand));
  }
  return find_objective(o.function);
}

SuiteReport single_run_report(const ObjectiveSpec& spec, const RmConfig& config,
                              std::size_t replicates, std::size_t threads) {
  SuiteReport report;
  report.metadata = SuiteMetadata{config.seed, replicates, config, std::nullopt};
  report.entries.push_back(
      make_entry(spec, run_replicates(spec, config, replicates, config.seed, threads)));
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotational mutation search on box-constrained benchmark functions", "rmga"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file with flag names as keys");

  Options o;
  const auto names = objective_names();
  app.add_option("-f,--function", o.function, "Objective: f1 f2 f3 f4 f5 beale quad")
      ->check(CLI::IsMember(names));
  app.add_option("--seed", o.seed, "Run seed (suite: base seed)")->capture_default_str();
  app.add_option("--rms", o.rms, "Base step length (RMS)")->capture_default_str();
  app.add_option("--beta", o.beta, "Comma-separated rotational step lengths")
      ->capture_default_str();
  app.add_option("--alphas", o.alphas, "Comma-separated directed-step multipliers")
      ->capture_default_str();
  app.add_option("--replicates", o.replicates, "Replicates per function")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-generations", o.max_generations, "Generation cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--vertex-cap", o.vertex_cap, "Max corners evaluated")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--direction-cap", o.direction_cap, "Max sign vectors per rotational search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("-o,--output", o.output, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out-file", o.out_file, "Write data here instead of standard output");
  app.add_option("--resolution", o.resolution, "Grid oracle resolution")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--oracle", o.oracle_kind, "grid or reach")
      ->check(CLI::IsMember({"grid", "reach"}))
      ->capture_default_str();
  app.add_option("--budget", o.budget, "Reachability oracle point budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--improving-only", o.improving_only,
               "Reachability through strictly improving moves only");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--timing", o.timing, "Include wall times in reports");

  auto* run_cmd = app.add_subcommand("run", "One run (or --replicates runs) on one function");
  auto* suite_cmd = app.add_subcommand("suite", "All seven functions with the PNG comparison");
  auto* oracle_cmd = app.add_subcommand("oracle", "Grid or reachability oracle for one function");
  auto* trace_cmd = app.add_subcommand("trace", "Trajectory records of one run");
  for (auto* sub : {run_cmd, suite_cmd, oracle_cmd, trace_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rmga: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string data;
  try {
    const RmConfig config = make_config(o);
    const Format format = parse_format(o.output);
    const RenderOptions render_options{o.timing};
    const auto start = std::chrono::steady_clock::now();

    if (run_cmd->parsed()) {
      const auto& spec = require_function(o, "run");
      data = render(single_run_report(spec, config, o.replicates, o.threads), format,
                    render_options);
    } else if (suite_cmd->parsed()) {
      data = render(run_suite(config, o.replicates, o.seed, o.threads), format, render_options);
    } else if (trace_cmd->parsed()) {
      const auto& spec = require_function(o, "trace");
      data = render_trace(*rmga_run(spec, config).trace, format);
    } else if (oracle_cmd->parsed()) {
      const auto& spec = require_function(o, "oracle");
      if (o.oracle_kind == "grid") {
        data = render_grid_oracle(spec, o.resolution, grid_oracle(spec, o.resolution), format);
      } else {
        const auto mode = o.improving_only ? ReachMode::Improving : ReachMode::Any;
        data = render_reachability(spec, reachability_oracle(spec, config, o.budget, mode),
                                   format);
      }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    err << fmt::format("rmga: done in {:.3f} s\n", elapsed.count());
  } catch (const UsageError& e) {
    err << "rmga: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "rmga: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "rmga: internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  if (o.out_file.empty()) {
    out << data;
    out.flush();
    return out ? kExitOk : kExitInternal;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  file << data;
  if (!file) {
    err << "rmga: cannot write " << o.out_file << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace rmga::cli
