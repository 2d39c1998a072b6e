#include "catalab/hamiltonian.hpp"

#include <bit>
#include <cmath>

#include "catalab/error.hpp"

namespace catalab {

namespace {

std::uint64_t bit(int k) { return std::uint64_t{1} << k; }

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidSpec, "catalyst sign must be +1 or -1");
}

}  // namespace

PauliTermSum problem_hamiltonian(const WeightedGraph& graph) {
  PauliTermSum h(graph.size());
  for (const Edge& e : graph.edges()) h.add(e.coupling, bit(e.u) | bit(e.v), 0);
  for (int v = 0; v < graph.size(); ++v) h.add(graph.linear_coefficient(v), bit(v), 0);
  return h;
}

PauliTermSum driver_hamiltonian(int n_qubits) {
  PauliTermSum h(n_qubits);
  for (int k = 0; k < n_qubits; ++k) h.add(-1.0, 0, bit(k));
  return h;
}

PauliTermSum product_catalyst(int n_qubits, int sign, double strength) {
  check_sign(sign);
  PauliTermSum h(n_qubits);
  h.add(-sign * strength, 0, (bit(n_qubits) - 1));
  return h;
}

PauliTermSum n_local_catalyst(const CatalystConfig& config, int n_qubits, double strength) {
  check_sign(config.sign);
  PauliTermSum h(n_qubits);
  for (const Subset& subset : config.subsets) {
    std::uint64_t mask = 0;
    for (int q : subset) {
      if (q < 0 || q >= n_qubits) throw Error(ErrorKind::InvalidSubset, "catalyst subset index out of range");
      mask |= bit(q);
    }
    if (std::popcount(mask) < 2) throw Error(ErrorKind::InvalidSubset, "catalyst subset needs at least two qubits");
    h.add(-config.sign * strength, 0, mask);
  }
  return h;
}

PauliTermSum anneal_hamiltonian(double s, const PauliTermSum& problem, const PauliTermSum& driver,
                                const PauliTermSum& catalyst) {
  if (!(s >= 0.0 && s <= 1.0)) throw Error(ErrorKind::InvalidRange, "anneal parameter outside [0, 1]");
  if (problem.n_qubits() != driver.n_qubits() || problem.n_qubits() != catalyst.n_qubits())
    throw Error(ErrorKind::DimensionMismatch, "anneal operands act on different registers");
  PauliTermSum h(problem.n_qubits());
  h.add(problem, s);
  h.add(driver, 1.0 - s);
  h.add(catalyst, s * (1.0 - s));
  return h;
}

PauliTermSum anneal_hamiltonian(double s, const PauliTermSum& problem, const PauliTermSum& driver) {
  return anneal_hamiltonian(s, problem, driver, PauliTermSum(problem.n_qubits()));
}

std::uint64_t basis_index(int n_qubits, std::span<const int> up) {
  std::uint64_t index = bit(n_qubits) - 1;
  for (int q : up) {
    if (q < 0 || q >= n_qubits) throw Error(ErrorKind::InvalidSubset, "qubit index out of range");
    index &= ~bit(q);
  }
  return index;
}

std::vector<int> up_set(int n_qubits, std::uint64_t index) {
  std::vector<int> out;
  for (int q = 0; q < n_qubits; ++q)
    if (!((index >> q) & 1U)) out.push_back(q);
  return out;
}

}  // namespace catalab
