#pragma once

#include <string>
#include <vector>

#include "catalab/graph.hpp"

namespace catalab {

struct FlipCostReport {
  std::string label;
  std::vector<int> flip_set;
  double symbolic_cost = 0.0;
  double numeric_cost = 0.0;
};

/// Energy costs of the four elementary flips away from the classical ground
/// state (partition B up) of a (k+1, k) bipartite toy: one A spin, one B
/// spin, every spin, one A and one B spin. Closed forms
///   4kJ - 4W_1/(k+1),  4W_2/k,  4(W_2 - W_1),  4(k-1)J - 4W_1/(k+1) + 4W_2/k
/// next to the difference of the problem Hamiltonian's diagonal entries.
std::vector<FlipCostReport> flip_costs(const BipartiteToySpec& spec);

/// flip_costs restricted to the (4, 3) toy; wrong-shape otherwise.
std::vector<FlipCostReport> appendix_a_costs(const BipartiteToySpec& spec);

/// (W_2 - W_1) < W_2 / k: the all-flipped state is the first excited
/// classical state of the (k+1, k) toy (given J large enough that states
/// with an up spin on both sides cost more). Invalid-order unless
/// 0 < W_1 < W_2.
bool first_order_condition(double w1, double w2, int k = 3);

/// Diagonal energy of the computational state with the given up-set.
double classical_energy(const WeightedGraph& graph, const std::vector<int>& up);

}  // namespace catalab
