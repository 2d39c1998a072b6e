#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalab/catalysts.hpp"
#include "catalab/gap_scan.hpp"
#include "catalab/graph.hpp"

namespace catalab {

struct ExperimentOptions {
  std::uint64_t seed = 20240607;
  ScanOptions scan;
  /// fig4: enumerate the whole L=7 space instead of a strided subsample.
  bool full = false;
  /// fig4: size of the L=7 subsample; 0 skips L=7.
  std::uint64_t samples = 100000;
  /// appC ensemble size.
  int instances = 200;
  /// fig6: placements tried by the optimal-family search.
  std::uint64_t budget = 100;
  /// fig8: bounded number of seeded weight draws.
  int attempts = 20000;
  /// fig8: fixed weights, skipping the search.
  std::optional<std::vector<double>> weights;
};

struct OutputFile {
  std::string name;
  std::string content;
};

/// Files are listed in a fixed order and rendered in memory, so the bytes
/// do not depend on how the work was scheduled.
struct ExperimentOutput {
  std::vector<OutputFile> files;
  nlohmann::json summary;

  const OutputFile* find(const std::string& name) const;
};

std::vector<std::string> preset_names();
ExperimentOutput run_preset(const std::string& name, const ExperimentOptions& options);
ExperimentOutput run_custom(const nlohmann::json& config, const ExperimentOptions& options);

/// Bipartite toy of odd size L: (L+1)/2 sites in A, (L-1)/2 in B, default
/// weights and coupling.
BipartiteToySpec default_toy(int n_vertices);
Partition toy_partition(const BipartiteToySpec& spec);
/// Block 0 against block 2.
Partition tripartite_partition(const TripartiteToySpec& spec);
/// Maximum-weight independent set against the remaining vertices.
Partition mwis_partition(const WeightedGraph& graph);

CatalystConfig product_config(int n_vertices, int sign = +1);
CatalystConfig edge_config(const WeightedGraph& graph, int sign = +1);
/// Edge XX terms plus XXX terms on the connected triples kept by the hierarchy filter.
CatalystConfig hierarchy_config(const WeightedGraph& graph, int sign = +1);
/// Unions of each pair of blocks.
CatalystConfig block_pair_config(const TripartiteToySpec& spec, int sign = +1);

/// Naive connected-triple count on the graph and what the hierarchy filter
/// keeps and rejects of it.
nlohmann::json filter_report(const WeightedGraph& graph);

struct EnsembleRow {
  int instance = 0;
  std::uint64_t seed = 0;
  double delta = 0.0;
  double delta_c1 = 0.0;
  double delta_c2 = 0.0;
  double delta_0 = 0.0;
};

void write_ensemble_csv(std::ostream& out, const std::vector<EnsembleRow>& rows);

}  // namespace catalab
