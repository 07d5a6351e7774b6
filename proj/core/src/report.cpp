#include "rmga/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

namespace rmga {

namespace {

using Json = nlohmann::ordered_json;

std::string point_tuple(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += format_number(p[i]);
  }
  return out + ")";
}

Json point_json(const Point& p) {
  return Json(std::vector<double>(p.coords().begin(), p.coords().end()));
}

Json config_json(const RmConfig& c) {
  Json j;
  j["rms"] = c.rms;
  j["alpha_multipliers"] = c.alpha_multipliers;
  j["beta_schedule"] = c.beta_schedule;
  j["max_generations"] = c.max_generations;
  j["vertex_cap"] = c.vertex_cap;
  j["direction_cap"] = c.direction_cap;
  j["stall_policy"] = "stop_on_no_improvement";
  return j;
}

template <typename T>
Json optional_array(const std::array<std::optional<T>, 5>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v ? Json(*v) : Json(nullptr));
  return arr;
}

std::string render_json(const SuiteReport& report, const RenderOptions& options) {
  Json root;
  Json meta;
  meta["base_seed"] = report.metadata.base_seed;
  meta["replicates"] = report.metadata.replicates;
  meta["config"] = config_json(report.metadata.config);
  if (report.metadata.timestamp) meta["timestamp"] = *report.metadata.timestamp;
  root["metadata"] = std::move(meta);

  Json entries = Json::array();
  for (const auto& entry : report.entries) {
    Json e;
    e["function"] = entry.function;
    e["noisy"] = entry.noisy;
    Json runs = Json::array();
    for (const auto& r : entry.runs) {
      Json run;
      run["function"] = r.function;
      run["rms"] = r.rms;
      run["trm"] = r.trm;
      run["best_point"] = point_json(r.best_point);
      run["bp"] = r.bp;
      run["seed"] = r.seed;
      if (options.include_timing) run["wall_time"] = r.wall_time;
      run["terminated_by"] = to_string(r.terminated_by);
      runs.push_back(std::move(run));
    }
    e["runs"] = std::move(runs);
    Json stats;
    stats["runs"] = entry.stats.runs;
    stats["mean_bp"] = entry.stats.mean_bp;
    stats["sd_bp"] = entry.stats.sd_bp;
    stats["min_bp"] = entry.stats.min_bp;
    stats["mean_trm"] = entry.stats.mean_trm;
    stats["min_trm"] = entry.stats.min_trm;
    stats["max_trm"] = entry.stats.max_trm;
    e["stats"] = std::move(stats);
    entries.push_back(std::move(e));
  }
  root["entries"] = std::move(entries);

  if (report.png) {
    Json png;
    png["functions"] = kDeJongNames;
    png["de_generations"] = kDeGenerations;
    png["measured_trm"] = optional_array(report.png->measured_trm);
    png["ratio"] = optional_array(report.png->ratio);
    png["published_trm"] = kPublishedRmgaTrm;
    png["published_png"] = kPublishedPng;
    png["published_f2_prose_factor"] = kPublishedF2ProseFactor;
    root["png"] = std::move(png);
  }
  return root.dump(2) + "\n";
}

std::string render_csv(const SuiteReport& report, const RenderOptions& options) {
  std::string out(kCsvHeader);
  if (options.include_timing) out += ",wall_time";
  out += '\n';
  for (const auto& entry : report.entries) {
    for (const auto& r : entry.runs) {
      out += fmt::format("{},{},{},{},{},{},{},{}", r.function, format_number(r.rms), r.trm,
                         format_point_csv(r.best_point), format_number(r.bp),
                         format_number(entry.stats.sd_bp), r.seed, to_string(r.terminated_by));
      if (options.include_timing) out += "," + format_number(r.wall_time);
      out += '\n';
    }
  }
  return out;
}

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string render_text(const SuiteReport& report, const RenderOptions& options) {
  std::vector<std::vector<std::string>> rows{
      {"Algorithm", "Function", "RMS", "TRM", "Best Point", "BP", "SD"}};
  if (options.include_timing) rows[0].push_back("Time(s)");
  bool any_noisy = false;
  for (const auto& entry : report.entries) {
    // Representative run: lowest bp, first seed on ties.
    const auto best = std::min_element(entry.runs.begin(), entry.runs.end(),
                                       [](const auto& a, const auto& b) { return a.bp < b.bp; });
    any_noisy = any_noisy || entry.noisy;
    rows.push_back({"RMGA", entry.function + (entry.noisy ? "*" : ""),
                    format_number(best->rms), format_number(entry.stats.mean_trm),
                    point_tuple(best->best_point), format_number(entry.stats.min_bp),
                    format_number(entry.stats.sd_bp)});
    if (options.include_timing) {
      double total = 0.0;
      for (const auto& r : entry.runs) total += r.wall_time;
      rows.back().push_back(format_number(total));
    }
  }
  std::string out = fmt::format("RMGA results (replicates={}, base seed={})\n",
                                report.metadata.replicates, report.metadata.base_seed);
  out += table(rows);
  if (any_noisy) {
    out += "* BP is the noise-free score of the returned point; the search itself saw "
           "Gauss(0,1) noise, so BP depends on the noise draws.\n";
  }

  if (report.png) {
    std::vector<std::vector<std::string>> png{{"Algorithm", "F1", "F2", "F3", "F4", "F5"}};
    for (const auto& row : kPublishedBaselines) {
      std::vector<std::string> cells{std::string(row.algorithm)};
      for (double g : row.generations) cells.push_back(format_number(g));
      png.push_back(std::move(cells));
    }
    std::vector<std::string> published_trm{"RMGA (published)"};
    std::vector<std::string> measured{"RMGA (measured)"};
    std::vector<std::string> ratio{"PNG"};
    std::vector<std::string> published_png{"PNG (published)"};
    for (std::size_t k = 0; k < 5; ++k) {
      published_trm.push_back(format_number(kPublishedRmgaTrm[k]));
      const auto& m = report.png->measured_trm[k];
      measured.push_back(m ? format_number(*m) : "-");
      const auto& r = report.png->ratio[k];
      ratio.push_back(r ? fmt::format("{:.3f}", *r) : (m ? "undefined" : "-"));
      published_png.push_back(fmt::format("{:.3f}", kPublishedPng[k]));
    }
    png.push_back(std::move(published_trm));
    png.push_back(std::move(measured));
    png.push_back(std::move(ratio));
    png.push_back(std::move(published_png));
    out += "\nAverage number of generations (PNG = DE / measured RMGA)\n";
    out += table(png);
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError(fmt::format("unknown output format '{}'", name));
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  const double magnitude = std::abs(value);
  if (magnitude >= 1e6) return fmt::format("{:.12g}", value);
  const int exponent = static_cast<int>(std::floor(std::log10(magnitude)));
  const int decimals = std::clamp(11 - exponent, 0, 340);
  std::string out = fmt::format("{:.{}f}", value, decimals);
  if (out.find('.') != std::string::npos) {
    out.erase(out.find_last_not_of('0') + 1);
    if (out.back() == '.') out.pop_back();
  }
  if (out == "-0") out = "0";
  return out;
}

std::string format_point_csv(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ';';
    out += format_number(p[i]);
  }
  return out;
}

std::string render(const SuiteReport& report, Format format, RenderOptions options) {
  switch (format) {
    case Format::Csv: return render_csv(report, options);
    case Format::Json: return render_json(report, options);
    case Format::Text: return render_text(report, options);
  }
  return {};
}

std::string render_trace(const Trace& trace, Format format) {
  std::string out;
  if (format == Format::Json) {
    for (const auto& event : trace) {
      Json j;
      j["generation"] = event.generation;
      j["kind"] = to_string(event.kind);
      j["point"] = point_json(event.point);
      j["value"] = event.value;
      if (event.direction) {
        j["direction"] = std::vector<int>(event.direction->signs().begin(),
                                          event.direction->signs().end());
      }
      if (event.step) j["step"] = *event.step;
      out += j.dump() + "\n";
    }
    return out;
  }
  out = "generation,kind,point,value,direction,step\n";
  for (const auto& event : trace) {
    std::string direction;
    if (event.direction) {
      for (std::size_t i = 0; i < event.direction->size(); ++i) {
        if (i > 0) direction += ';';
        direction += (*event.direction)[i] > 0 ? "1" : "-1";
      }
    }
    out += fmt::format("{},{},{},{},{},{}\n", event.generation, to_string(event.kind),
                       format_point_csv(event.point), format_number(event.value), direction,
                       event.step ? format_number(*event.step) : "");
  }
  return out;
}

std::string render_grid_oracle(const ObjectiveSpec& spec, double resolution,
                               const GridOracleResult& result, Format format) {
  switch (format) {
    case Format::Json: {
      Json j;
      j["function"] = spec.name;
      j["resolution"] = resolution;
      j["evaluated"] = result.evaluated;
      j["best_point"] = point_json(result.point);
      j["value"] = result.value;
      return j.dump(2) + "\n";
    }
    case Format::Csv:
      return fmt::format("function,resolution,evaluated,best_point,value\n{},{},{},{},{}\n",
                         spec.name, format_number(resolution), result.evaluated,
                         format_point_csv(result.point), format_number(result.value));
    case Format::Text:
      return fmt::format(
          "grid oracle: {}\nresolution: {}\nevaluated:  {}\nbest point: {}\nvalue:      {}\n",
          spec.name, format_number(resolution), result.evaluated, point_tuple(result.point),
          format_number(result.value));
  }
  return {};
}

std::string render_reachability(const ObjectiveSpec& spec, const ReachabilityResult& result,
                                Format format) {
  switch (format) {
    case Format::Json: {
      Json j;
      j["function"] = spec.name;
      j["start"] = point_json(result.start);
      j["visited"] = result.visited;
      j["partial"] = result.partial;
      j["optimum_reachable"] = result.optimum_reachable;
      j["best_point"] = point_json(result.best_point);
      j["best_value"] = result.best_value;
      return j.dump(2) + "\n";
    }
    case Format::Csv:
      return fmt::format(
          "function,start,visited,partial,optimum_reachable,best_point,best_value\n"
          "{},{},{},{},{},{},{}\n",
          spec.name, format_point_csv(result.start), result.visited, result.partial,
          result.optimum_reachable, format_point_csv(result.best_point),
          format_number(result.best_value));
    case Format::Text:
      return fmt::format(
          "reachability oracle: {}\nstart:             {}\nvisited:           {}{}\n"
          "optimum reachable: {}\nbest point:        {}\nbest value:        {}\n",
          spec.name, point_tuple(result.start), result.visited,
          result.partial ? " (budget exhausted)" : "", result.optimum_reachable ? "yes" : "no",
          point_tuple(result.best_point), format_number(result.best_value));
  }
  return {};
}

}  // namespace rmga
