#pragma once

#include <cstdint>
#include <span>

#include "catalab/catalyst_config.hpp"
#include "catalab/graph.hpp"
#include "catalab/pauli_sum.hpp"

namespace catalab {

/// Ising form of the MWIS instance: J_ij Z_i Z_j per edge plus
/// (sum_j J_ij - 2 w_i) Z_i per vertex. Its diagonal is minimized exactly on
/// the states whose up-spin set is a maximum-weight independent set.
PauliTermSum problem_hamiltonian(const WeightedGraph& graph);

/// -sum_i X_i.
PauliTermSum driver_hamiltonian(int n_qubits);

/// -sign * strength * X...X over all qubits.
PauliTermSum product_catalyst(int n_qubits, int sign = +1, double strength = 1.0);

/// One -sign * strength * X...X term per subset of the config.
PauliTermSum n_local_catalyst(const CatalystConfig& config, int n_qubits, double strength = 1.0);

/// s H_p + (1 - s) H_D + s (1 - s) H_c.
PauliTermSum anneal_hamiltonian(double s, const PauliTermSum& problem, const PauliTermSum& driver,
                                const PauliTermSum& catalyst);
PauliTermSum anneal_hamiltonian(double s, const PauliTermSum& problem, const PauliTermSum& driver);

/// Basis index of the computational state whose spin-up qubits are exactly
/// `up` (a set bit means spin down).
std::uint64_t basis_index(int n_qubits, std::span<const int> up);
/// Spin-up qubits of basis state `index`, ascending.
std::vector<int> up_set(int n_qubits, std::uint64_t index);

}  // namespace catalab
