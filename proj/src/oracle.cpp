#include "catalab/oracle.hpp"

#include <numeric>

#include "catalab/error.hpp"
#include "catalab/hamiltonian.hpp"

namespace catalab {

double classical_energy(const WeightedGraph& graph, const std::vector<int>& up) {
  const CompiledOperator op(problem_hamiltonian(graph));
  return op.diagonal()[basis_index(graph.size(), up)];
}

std::vector<FlipCostReport> flip_costs(const BipartiteToySpec& spec) {
  const WeightedGraph g = build_bipartite(spec);
  const int k = spec.size_b;
  const double j = spec.coupling, w1 = spec.total_weight_a, w2 = spec.total_weight_b;
  const double wa = w1 / (k + 1), wb = w2 / k;

  std::vector<int> a(spec.size_a), b(spec.size_b);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), spec.size_a);

  const CompiledOperator op(problem_hamiltonian(g));
  const auto diag = op.diagonal();
  const int n = g.size();
  const std::uint64_t ground = basis_index(n, b);
  auto cost = [&](const std::vector<int>& flips) {
    std::uint64_t state = ground;
    for (int v : flips) state ^= std::uint64_t{1} << v;
    return diag[state] - diag[ground];
  };

  const int a0 = a.front(), b0 = b.front();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<FlipCostReport> out = {
      {"one-a", {a0}, 4.0 * k * j - 4.0 * wa, 0.0},
      {"one-b", {b0}, 4.0 * wb, 0.0},
      {"all", all, 4.0 * (w2 - w1), 0.0},
      {"one-a-one-b", {a0, b0}, 4.0 * (k - 1) * j - 4.0 * wa + 4.0 * wb, 0.0},
  };
  for (FlipCostReport& r : out) r.numeric_cost = cost(r.flip_set);
  return out;
}

std::vector<FlipCostReport> appendix_a_costs(const BipartiteToySpec& spec) {
  if (spec.size_a != 4 || spec.size_b != 3) throw Error(ErrorKind::WrongShape, "closed forms are stated for sizes (4, 3)");
  return flip_costs(spec);
}

bool first_order_condition(double w1, double w2, int k) {
  if (!(w1 > 0.0)) throw Error(ErrorKind::InvalidRange, "W_1 must be positive");
  if (!(w1 < w2)) throw Error(ErrorKind::InvalidOrder, "condition needs W_1 < W_2");
  if (k < 1) throw Error(ErrorKind::InvalidRange, "k must be positive");
  return (w2 - w1) < w2 / k;
}

}  // namespace catalab
