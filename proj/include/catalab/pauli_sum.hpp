#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

namespace catalab {

/// coeff * prod_k P_k with P_k = Z if bit k of z_mask, X if bit k of x_mask,
/// identity otherwise. Basis index bit k clear means qubit k is spin up
/// (sigma^z = +1); Z on a set bit contributes -1.
struct PauliTerm {
  double coeff = 0.0;
  std::uint64_t z_mask = 0;
  std::uint64_t x_mask = 0;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Real symmetric operator on n qubits as a sum of I/X/Z strings. Terms with
/// equal masks are merged on insertion and exact zeros are dropped, so two
/// sums built the same way compare equal term-for-term.
class PauliTermSum {
 public:
  static constexpr int kMaxQubits = 30;

  explicit PauliTermSum(int n_qubits);
  PauliTermSum(int n_qubits, std::span<const PauliTerm> terms);

  void add(double coeff, std::uint64_t z_mask, std::uint64_t x_mask);
  void add(const PauliTermSum& other, double scale = 1.0);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  std::span<const PauliTerm> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  bool is_diagonal() const;
  /// All off-diagonal matrix elements <= 0 in the computational basis.
  bool is_stoquastic() const;

  friend bool operator==(const PauliTermSum&, const PauliTermSum&) = default;

 private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Literal scatter form of the matvec, one term at a time:
/// out[b ^ x] += c * (-1)^popcount(b & z) * in[b]. Serial; kept as the
/// reference the compiled kernel is tested against.
void apply_reference(const PauliTermSum& op, std::span<const double> in, std::span<double> out);

/// Matrix-free operator prepared for repeated matvecs: Z-only terms are folded
/// into a diagonal and the rest are grouped by flip mask. Each output entry is
/// a gather with a fixed summation order, so the OpenMP and serial kernels
/// are bit-identical for any thread count.
class CompiledOperator {
 public:
  explicit CompiledOperator(const PauliTermSum& op);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return diagonal_.size(); }
  std::span<const double> diagonal() const { return diagonal_; }
  bool is_diagonal() const { return flips_.empty() && plain_masks_.empty(); }

  /// Threads over basis indices unless called inside an active parallel region.
  void apply(std::span<const double> in, std::span<double> out) const;
  void apply_serial(std::span<const double> in, std::span<double> out) const;

  /// (row, value) pairs of column `col`, diagonal first.
  std::vector<std::pair<std::size_t, double>> column(std::size_t col) const;

 private:
  struct Flip {
    std::uint64_t x_mask;
    std::vector<std::pair<std::uint64_t, double>> phases;
  };

  double gather(std::size_t c, std::span<const double> in) const;
  void check(std::span<const double> in, std::span<double> out) const;

  int n_qubits_;
  std::vector<double> diagonal_;
  // Pure X strings (the only kind the anneal Hamiltonians contain) are kept
  // flat; flips carrying Z phases go through the general path.
  std::vector<std::uint64_t> plain_masks_;
  std::vector<double> plain_coeffs_;
  std::vector<Flip> flips_;
};

/// Convenience wrapper: op applied to state.
std::vector<double> apply(const PauliTermSum& op, std::span<const double> state);

/// Debug dump: [{coeff, z_mask, x_mask}, ...].
nlohmann::json to_json(const PauliTermSum& op);

}  // namespace catalab
