#include "catalab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "catalab/error.hpp"
#include "catalab/random.hpp"

namespace catalab {

namespace {

std::string edge_name(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.u << "," << e.v << ")";
  return os.str();
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<double> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)) {
  const int n = size();
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "graph needs at least one vertex");
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "graph has more than 63 vertices");
  for (int v = 0; v < n; ++v) {
    if (!(weights_[v] > 0.0) || !std::isfinite(weights_[v]))
      throw Error(ErrorKind::InvalidSpec, "weight of vertex " + std::to_string(v) + " is not positive");
  }

  adjacency_.assign(n, 0);
  for (Edge e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) throw Error(ErrorKind::InvalidSpec, "edge " + edge_name(e) + " out of range");
    if (e.u == e.v) throw Error(ErrorKind::InvalidSpec, "self-loop at vertex " + std::to_string(e.u));
    if ((adjacency_[e.u] >> e.v) & 1U) throw Error(ErrorKind::InvalidSpec, "duplicate edge " + edge_name(e));
    if (!(e.coupling > std::min(weights_[e.u], weights_[e.v])) || !std::isfinite(e.coupling))
      throw Error(ErrorKind::InvalidSpec, "edge " + edge_name(e) + " violates J > min(w_i, w_j)");
    adjacency_[e.u] |= std::uint64_t{1} << e.v;
    adjacency_[e.v] |= std::uint64_t{1} << e.u;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
}

int WeightedGraph::degree(int v) const { return std::popcount(adjacency_[v]); }

double WeightedGraph::coupling(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<int, int>& key) {
                               return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return it->coupling;
  return 0.0;
}

double WeightedGraph::linear_coefficient(int v) const {
  double sum = 0.0;
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) sum += e.coupling;
  return sum - 2.0 * weights_[v];
}

double WeightedGraph::set_weight(std::span<const int> vertices) const {
  double total = 0.0;
  for (int v : vertices) total += weights_[v];
  return total;
}

bool WeightedGraph::is_independent(std::span<const int> vertices) const {
  std::uint64_t mask = 0;
  for (int v : vertices) mask |= std::uint64_t{1} << v;
  for (int v : vertices)
    if (adjacency_[v] & mask) return false;
  return true;
}

std::vector<int> TripartiteToySpec::block(int k) const {
  int start = 0;
  for (int i = 0; i < k; ++i) start += block_sizes[i];
  std::vector<int> out(block_sizes[k]);
  std::iota(out.begin(), out.end(), start);
  return out;
}

WeightedGraph build_bipartite(const BipartiteToySpec& spec) {
  if (spec.size_a < 1 || spec.size_b < 1 || spec.size_a != spec.size_b + 1)
    throw Error(ErrorKind::InvalidSpec, "bipartite toy needs size_a = size_b + 1 >= 2");
  if (!(spec.total_weight_a > 0.0) || !(spec.total_weight_b > 0.0) || !(spec.coupling > 0.0))
    throw Error(ErrorKind::InvalidSpec, "bipartite weights and coupling must be positive");

  const int n = spec.size();
  std::vector<double> weights(n);
  for (int i = 0; i < n; ++i)
    weights[i] = i < spec.size_a ? spec.total_weight_a / spec.size_a : spec.total_weight_b / spec.size_b;

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.size_a) * spec.size_b);
  for (int i = 0; i < spec.size_a; ++i)
    for (int j = spec.size_a; j < n; ++j) edges.push_back({i, j, spec.coupling});
  return WeightedGraph(std::move(weights), std::move(edges));
}

WeightedGraph build_tripartite(const TripartiteToySpec& spec) {
  for (int k = 0; k < 3; ++k) {
    if (spec.block_sizes[k] < 1) throw Error(ErrorKind::InvalidSpec, "tripartite blocks must be nonempty");
    if (!(spec.block_weights[k] > 0.0)) throw Error(ErrorKind::InvalidSpec, "tripartite weights must be positive");
  }
  if (!(spec.coupling > 0.0)) throw Error(ErrorKind::InvalidSpec, "tripartite coupling must be positive");

  std::vector<int> block_of;
  std::vector<double> weights;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < spec.block_sizes[k]; ++i) {
      block_of.push_back(k);
      weights.push_back(spec.block_weights[k] / spec.block_sizes[k]);
    }
  }
  std::vector<Edge> edges;
  const int n = spec.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (block_of[i] != block_of[j]) edges.push_back({i, j, spec.coupling});
  return WeightedGraph(std::move(weights), std::move(edges));
}

WeightedGraph erdos_renyi_instance(const ErdosRenyiParams& params, std::uint64_t seed) {
  if (params.n < 1) throw Error(ErrorKind::InvalidRange, "n must be positive");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw Error(ErrorKind::InvalidRange, "p must lie in [0, 1]");
  if (!(params.weight_low >= 0.0) || params.weight_high < params.weight_low)
    throw Error(ErrorKind::InvalidRange, "weight range must satisfy 0 <= low <= high");
  if (params.coupling_high < params.coupling_low)
    throw Error(ErrorKind::InvalidRange, "coupling range is inverted");
  if (params.coupling_low < params.weight_high)
    throw Error(ErrorKind::InvalidRange, "coupling_low < weight_high cannot guarantee J > min(w_i, w_j)");

  Rng rng(seed);
  std::vector<double> weights(params.n);
  for (double& w : weights) {
    do {
      w = rng.uniform(params.weight_low, params.weight_high);
    } while (!(w > 0.0));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < params.n; ++i) {
    for (int j = i + 1; j < params.n; ++j) {
      // Always consume both draws so the coupling stream does not depend on p.
      const double trial = rng.uniform();
      double coupling = rng.uniform(params.coupling_low, params.coupling_high);
      if (!(coupling > std::min(weights[i], weights[j]))) coupling = params.coupling_high;
      if (trial < params.p) edges.push_back({i, j, coupling});
    }
  }
  return WeightedGraph(std::move(weights), std::move(edges));
}

Topology table1_topology() {
  // (1-indexed vertex pairs as tabulated, coupling)
  static constexpr struct {
    int u, v;
    double j;
  } kRows[] = {
      {1, 4, 1.66122},  {1, 6, 1.01834},  {1, 8, 1.14459},  {2, 3, 1.78942},  {2, 4, 1.10915},
      {2, 6, 1.8282},   {2, 7, 1.76385},  {3, 4, 1.57587},  {3, 9, 1.03825},  {3, 10, 1.88831},
      {4, 7, 1.27207},  {4, 9, 1.02395},  {4, 10, 1.68937}, {5, 6, 1.23293},  {5, 8, 1.32764},
      {5, 9, 1.0961},   {6, 10, 1.09028}, {7, 8, 1.19425},  {7, 9, 1.22829},  {7, 10, 1.96842},
      {8, 10, 1.30031},
  };
  Topology t;
  t.n_vertices = 10;
  for (const auto& row : kRows) t.edges.push_back({row.u - 1, row.v - 1, row.j});
  return t;
}

WeightedGraph with_weights(const Topology& topology, std::vector<double> weights) {
  if (static_cast<int>(weights.size()) != topology.n_vertices)
    throw Error(ErrorKind::InvalidSpec, "weight vector length does not match the topology");
  return WeightedGraph(std::move(weights), topology.edges);
}

MwisSolution brute_force_mwis(const WeightedGraph& graph) {
  const int n = graph.size();
  if (n > kMwisMaxVertices) throw Error(ErrorKind::TooLarge, "exhaustive MWIS is limited to 30 vertices");

  std::vector<double> suffix(n + 1, 0.0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + graph.weight(v);

  MwisSolution best;
  best.weight = -1.0;
  std::vector<int> current;
  auto is_tie = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };

  std::function<void(int, std::uint64_t, double)> search = [&](int v, std::uint64_t blocked, double weight) {
    if (weight + suffix[v] < best.weight && !is_tie(weight + suffix[v], best.weight)) return;
    if (v == n) {
      if (is_tie(weight, best.weight)) {
        if (std::lexicographical_compare(current.begin(), current.end(), best.vertices.begin(),
                                         best.vertices.end()))
          best.vertices = current;
      } else if (weight > best.weight) {
        best.weight = weight;
        best.vertices = current;
      }
      return;
    }
    if (!((blocked >> v) & 1U)) {
      current.push_back(v);
      search(v + 1, blocked | graph.neighbor_mask(v), weight + graph.weight(v));
      current.pop_back();
    }
    search(v + 1, blocked, weight);
  };
  search(0, 0, 0.0);
  best.weight = graph.set_weight(best.vertices);
  return best;
}

std::vector<std::vector<int>> odd_frustrated_loops(const WeightedGraph& graph, int max_length) {
  if (max_length < 3) throw Error(ErrorKind::InvalidRange, "max_length must be at least 3");
  const int n = graph.size();
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;

  // Cycles rooted at their smallest vertex; orientation fixed by path[1] < path.back().
  std::function<void(int, std::uint64_t)> extend = [&](int v, std::uint64_t visited) {
    const int root = path.front();
    const int len = static_cast<int>(path.size());
    if (len >= 3 && (len % 2 == 1) && graph.adjacent(v, root) && path[1] < path.back()) cycles.push_back(path);
    if (len == max_length) return;
    std::uint64_t next = graph.neighbor_mask(v) & ~visited;
    while (next) {
      const int w = std::countr_zero(next);
      next &= next - 1;
      if (w <= root) continue;
      path.push_back(w);
      extend(w, visited | (std::uint64_t{1} << w));
      path.pop_back();
    }
  };
  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    extend(root, std::uint64_t{1} << root);
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return cycles;
}

bool induced_bipartite(const WeightedGraph& graph, std::span<const int> vertices) {
  std::uint64_t members = 0;
  for (int v : vertices) members |= std::uint64_t{1} << v;
  std::uint64_t seen = 0;
  std::uint64_t colour = 0;  // bit set = side 1
  for (int start : vertices) {
    if ((seen >> start) & 1U) continue;
    std::vector<int> stack{start};
    seen |= std::uint64_t{1} << start;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const bool side = (colour >> v) & 1U;
      std::uint64_t nbrs = graph.neighbor_mask(v) & members;
      while (nbrs) {
        const int w = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if ((seen >> w) & 1U) {
          if (static_cast<bool>((colour >> w) & 1U) == side) return false;
          continue;
        }
        seen |= std::uint64_t{1} << w;
        if (!side) colour |= std::uint64_t{1} << w;
        stack.push_back(w);
      }
    }
  }
  return true;
}

nlohmann::json to_json(const WeightedGraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v, e.coupling});
  return {{"n", graph.size()},
          {"weights", std::vector<double>(graph.weights().begin(), graph.weights().end())},
          {"edges", edges}};
}

WeightedGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto weights = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(weights.size()) != n)
      throw Error(ErrorKind::InvalidSpec, "'weights' length differs from 'n'");
    std::vector<Edge> edges;
    for (const auto& row : j.at("edges")) {
      if (!row.is_array() || row.size() != 3) throw Error(ErrorKind::InvalidSpec, "edge rows must be [i, j, J]");
      edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<double>()});
    }
    return WeightedGraph(std::move(weights), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace catalab
