#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "catalab/pauli_sum.hpp"

namespace catalab {

enum class SolverMethod { Auto, Lanczos, Dense, Diagonal };

const char* to_string(SolverMethod method);

struct SolverOptions {
  int k = 2;
  /// Bound on every returned residual ||H v - lambda v||.
  double tol = 1e-9;
  int max_basis = 400;
  int max_restarts = 30;
  std::uint64_t seed = 0x243F6A8885A308D3ULL;
  SolverMethod method = SolverMethod::Auto;
  /// Auto uses dense diagonalization at or below this dimension.
  std::size_t dense_threshold = 64;
  /// Run a deflated second pass to catch eigenvalues a single Krylov
  /// sequence cannot see (extra copies of a degenerate level).
  bool check_multiplicity = true;
  /// Dense fallback after Lanczos fails, at or below this dimension.
  std::size_t fallback_limit = 4096;
};

struct EigenResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> residual_norms;
  /// E_1 - E_0 < 100 tol; vectors inside that subspace are arbitrary.
  bool degenerate = false;
  int iterations = 0;
  SolverMethod method = SolverMethod::Auto;
};

/// k algebraically smallest eigenpairs. `warm` vectors (e.g. the previous
/// scan point's eigenvectors) seed the Krylov start; a seeded random
/// component is always mixed in. Eigenvectors are sign-fixed so their
/// largest-magnitude entry is positive.
EigenResult lowest_eigenpairs(const PauliTermSum& op, const SolverOptions& options = {},
                              std::span<const std::vector<double>> warm = {});
EigenResult lowest_eigenpairs(const CompiledOperator& op, const SolverOptions& options = {},
                              std::span<const std::vector<double>> warm = {});

/// Full dense diagonalization (all 2^L pairs, ascending).
EigenResult dense_eigenpairs(const CompiledOperator& op);

}  // namespace catalab
