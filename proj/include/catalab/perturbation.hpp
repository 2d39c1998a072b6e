#pragma once

#include "catalab/eigensolver.hpp"
#include "catalab/pauli_sum.hpp"

namespace catalab {

struct EnergyCorrections {
  double first = 0.0;
  double second = 0.0;
  /// third = third_connected + third_renormalization.
  double third = 0.0;
  /// lambda^3 sum_{m,k != n} V_nk V_km V_mn / ((E_n - E_m)(E_n - E_k))
  double third_connected = 0.0;
  /// -lambda^3 V_nn sum_{m != n} |V_mn|^2 / (E_n - E_m)^2
  double third_renormalization = 0.0;

  double total() const { return first + second + third; }
};

/// Rayleigh-Schroedinger corrections to level `target` of the unperturbed
/// spectrum, which must be complete (all 2^L pairs, e.g. from
/// dense_eigenpairs). Throws degenerate-target when the level is closer than
/// 1e-10 (relative) to a neighbour.
EnergyCorrections energy_corrections(const EigenResult& unperturbed, const PauliTermSum& perturbation, double lambda,
                                     int target);

}  // namespace catalab
