#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "catalab/catalysts.hpp"
#include "catalab/error.hpp"
#include "catalab/experiments.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace catalab;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kFailure = 1, kValidation = 2, kNoConvergence = 3 };

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, path + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json options_json(const ExperimentOptions& o, int workers) {
  json j = {{"seed", o.seed},         {"workers", workers},     {"full", o.full},
            {"samples", o.samples},   {"instances", o.instances}, {"budget", o.budget},
            {"attempts", o.attempts}, {"grid_points", o.scan.grid_points}, {"tol", o.scan.solver.tol},
            {"refine_tol", o.scan.refine_tol}};
  if (o.weights) j["weights"] = *o.weights;
  return j;
}

void emit(const fs::path& dir, const ExperimentOutput& result, json manifest) {
  fs::create_directories(dir);
  json files = json::array();
  for (const OutputFile& f : result.files) {
    write_file(dir / f.name, f.content);
    files.push_back({{"name", f.name}, {"bytes", f.content.size()}});
  }
  manifest["files"] = files;
  manifest["summary"] = result.summary;
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalyst experiments for annealing on weighted independent-set instances"};
  app.require_subcommand(1);
  app.fallthrough();

  ExperimentOptions options;
  int workers = 0;
  std::string out_dir;
  std::vector<double> weights;
  app.add_option("--seed", options.seed, "Master seed")->capture_default_str();
  app.add_option("--workers", workers, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--grid-points", options.scan.grid_points, "Coarse grid points in s")->capture_default_str();
  app.add_option("--tol", options.scan.solver.tol, "Eigensolver residual tolerance")->capture_default_str();
  app.add_option("--refine-tol", options.scan.refine_tol, "Width at which the minimum search stops")
      ->capture_default_str();
  app.add_flag("--full", options.full, "fig4: enumerate all L=7 configurations");
  app.add_option("--samples", options.samples, "fig4: L=7 subsample size (0 skips)")->capture_default_str();
  app.add_option("--instances", options.instances, "appC: ensemble size")->capture_default_str();
  app.add_option("--budget", options.budget, "fig6: placements tried by the optimal search")->capture_default_str();
  app.add_option("--attempts", options.attempts, "fig8: weight draws to try")->capture_default_str();
  app.add_option("--weights", weights, "fig8: fixed vertex weights")->delimiter(',');

  std::string preset, config_path, graph_path;
  int filter_n = 3;
  auto* preset_cmd = app.add_subcommand("preset", "Run a named experiment preset");
  preset_cmd->add_option("name", preset, "Preset name")->required()->check(CLI::IsMember(preset_names()));
  auto* custom_cmd = app.add_subcommand("custom", "Run an experiment described by a JSON config");
  custom_cmd->add_option("config", config_path, "Config JSON")->required();
  auto* mwis_cmd = app.add_subcommand("mwis", "Solve a graph's weighted independent set exactly");
  mwis_cmd->add_option("graph", graph_path, "Graph JSON")->required();
  auto* filter_cmd = app.add_subcommand("filter", "Report which catalyst subsets survive the odd-cycle filter");
  filter_cmd->add_option("graph", graph_path, "Graph JSON")->required();
  filter_cmd->add_option("--n", filter_n, "Subset size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  std::string command;
  for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);

  try {
    if (workers > 0) omp_set_num_threads(workers);
    if (!weights.empty()) options.weights = weights;
    const int threads = omp_get_max_threads();
    json manifest = {{"tool", "catalab"},          {"version", kVersion}, {"command", command},
                     {"started_utc", utc_now()},   {"compiler", __VERSION__},
                     {"options", options_json(options, threads)}};
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

    if (*preset_cmd || *custom_cmd) {
      ExperimentOutput result;
      if (*preset_cmd) {
        manifest["preset"] = preset;
        result = run_preset(preset, options);
      } else {
        const json config = read_json(config_path);
        manifest["config"] = config;
        result = run_custom(config, options);
      }
      manifest["wall_time_s"] = elapsed();
      const fs::path dir = out_dir.empty() ? fs::path("out") / (*preset_cmd ? preset : "custom") : fs::path(out_dir);
      emit(dir, result, manifest);
      std::cout << "wrote " << result.files.size() << " files and manifest.json to " << dir.string() << "\n";
      return kOk;
    }

    const WeightedGraph graph = graph_from_json(read_json(graph_path));
    json report;
    if (*mwis_cmd) {
      const MwisSolution s = brute_force_mwis(graph);
      report = {{"vertices", s.vertices}, {"weight", s.weight}};
    } else {
      std::vector<Subset> candidates = filter_n <= 3 ? edge_sets(graph, filter_n) : all_sets(graph.size(), filter_n);
      const FilterResult f = hierarchy_filter(graph, candidates);
      report = {{"n", filter_n},
                {"candidates", candidates.size()},
                {"kept", f.allowed.size()},
                {"rejected", f.rejected.size()},
                {"allowed", f.allowed},
                {"rejected_subsets", f.rejected}};
    }
    std::cout << report.dump(2) << "\n";
    if (!out_dir.empty()) {
      manifest["graph"] = to_json(graph);
      manifest["wall_time_s"] = elapsed();
      ExperimentOutput result;
      result.files.push_back({*mwis_cmd ? "mwis.json" : "filter.json", report.dump(2) + "\n"});
      emit(out_dir, result, manifest);
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::NoConvergence) return kNoConvergence;
    if (e.kind() == ErrorKind::Io) return kFailure;
    return kValidation;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
