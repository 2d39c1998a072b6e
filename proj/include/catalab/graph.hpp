#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace catalab {

struct Edge {
  int u = 0;
  int v = 0;
  double coupling = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge list without vertex weights.
struct Topology {
  int n_vertices = 0;
  std::vector<Edge> edges;
};

/// An MWIS instance: positive vertex weights and antiferromagnetic couplings
/// with J_ij > min(w_i, w_j) on every edge. Edges are stored canonically
/// (u < v, sorted); vertices are 0-indexed and limited to 63 so that
/// neighbourhoods fit a bit mask.
class WeightedGraph {
 public:
  static constexpr int kMaxVertices = 63;

  WeightedGraph(std::vector<double> weights, std::vector<Edge> edges);

  int size() const { return static_cast<int>(weights_.size()); }
  std::span<const double> weights() const { return weights_; }
  double weight(int v) const { return weights_[v]; }
  std::span<const Edge> edges() const { return edges_; }

  bool adjacent(int u, int v) const { return (adjacency_[u] >> v) & 1U; }
  std::uint64_t neighbor_mask(int v) const { return adjacency_[v]; }
  int degree(int v) const;

  /// Coupling of edge (u, v); 0 if absent.
  double coupling(int u, int v) const;

  /// Sum of incident couplings minus twice the weight: the single-Z
  /// coefficient in the Ising form of the instance.
  double linear_coefficient(int v) const;

  /// Total weight of a vertex set.
  double set_weight(std::span<const int> vertices) const;
  bool is_independent(std::span<const int> vertices) const;

  Topology topology() const { return {size(), edges_}; }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<double> weights_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// Complete bipartite toy: partition A (size_a vertices, total weight
/// total_weight_a) and B (size_b, total_weight_b), uniform coupling.
struct BipartiteToySpec {
  int size_a = 4;
  int size_b = 3;
  double total_weight_a = 0.0396;
  double total_weight_b = 0.04;
  double coupling = 0.2132;

  int size() const { return size_a + size_b; }
};

/// Complete tripartite toy over three blocks with uniform coupling; block k
/// carries total weight block_weights[k], split evenly over its sites.
struct TripartiteToySpec {
  std::array<int, 3> block_sizes{2, 3, 4};
  std::array<double, 3> block_weights{0.04, 0.0396, 0.0392};
  double coupling = 0.2132;

  int size() const { return block_sizes[0] + block_sizes[1] + block_sizes[2]; }
  /// Vertex indices of block k (blocks are laid out consecutively).
  std::vector<int> block(int k) const;
};

struct ErdosRenyiParams {
  int n = 10;
  double p = 0.5;
  double weight_low = 0.0;
  double weight_high = 1.0;
  double coupling_low = 1.0;
  double coupling_high = 2.0;
};

WeightedGraph build_bipartite(const BipartiteToySpec& spec);
WeightedGraph build_tripartite(const TripartiteToySpec& spec);

/// G(n, p) with uniform weights and couplings; a pure function of its
/// arguments. Weights of exactly zero are redrawn so every weight is positive.
WeightedGraph erdos_renyi_instance(const ErdosRenyiParams& params, std::uint64_t seed);

/// The ten-vertex, 21-edge random instance with tabulated couplings used as
/// the worked example of the hierarchy filter (0-indexed).
Topology table1_topology();

WeightedGraph with_weights(const Topology& topology, std::vector<double> weights);

struct MwisSolution {
  std::vector<int> vertices;
  double weight = 0.0;
};

/// Exhaustive branch-and-bound maximum-weight independent set; ties (within a
/// relative 1e-12) go to the lexicographically smallest vertex list.
MwisSolution brute_force_mwis(const WeightedGraph& graph);
inline constexpr int kMwisMaxVertices = 30;

/// All simple cycles of odd length <= max_length. Each cycle starts at its
/// smallest vertex and is listed in one orientation.
std::vector<std::vector<int>> odd_frustrated_loops(const WeightedGraph& graph, int max_length = 7);

/// True iff the subgraph induced on `vertices` has no odd cycle.
bool induced_bipartite(const WeightedGraph& graph, std::span<const int> vertices);

nlohmann::json to_json(const WeightedGraph& graph);
WeightedGraph graph_from_json(const nlohmann::json& j);

}  // namespace catalab
