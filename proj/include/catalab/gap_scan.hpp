#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "catalab/catalyst_config.hpp"
#include "catalab/eigensolver.hpp"
#include "catalab/graph.hpp"
#include "catalab/pauli_sum.hpp"

namespace catalab {

/// Vertex sets for the imbalance I = sum_A Z - sum_B Z.
struct Partition {
  std::vector<int> a;
  std::vector<int> b;
};

/// <state| I |state> for a normalized state.
double order_parameter(std::span<const double> state, const Partition& partition);
/// Diagonal of I in the computational basis.
std::vector<double> order_parameter_diagonal(int n_qubits, const Partition& partition);

struct ScanOptions {
  int grid_points = 101;
  /// Uniform subgrid laid over the coarse bracket before golden-section search.
  int subgrid_points = 21;
  /// Golden-section search stops once the bracket is narrower than this.
  double refine_tol = 1e-10;
  /// Width of the s-interval over which order-parameter jumps are measured.
  double jump_step = 4e-4;
  /// The jump window spans s_star +- window_steps * jump_step / 4.
  int window_steps = 40;
  bool resolve_jump = true;
  bool parallel = true;
  SolverOptions solver;
};

struct ScanPoint {
  double s = 0.0;
  double gap = 0.0;
  double order_param = 0.0;
  bool degenerate = false;
};

struct GapScan {
  std::vector<ScanPoint> coarse;
  /// Subgrid and golden-section probes, in evaluation order.
  std::vector<ScanPoint> refined;
  /// Uniform samples around s_star at spacing jump_step / 4.
  std::vector<ScanPoint> window;
  double jump_step = 0.0;
  double delta_min = 0.0;
  double s_star = 0.0;
  double problem_gap = 0.0;

  /// Every evaluated point, sorted by s, duplicates removed.
  std::vector<ScanPoint> points() const;
  /// Largest |I(s + jump_step) - I(s)| inside the window; adjacent coarse
  /// points when no window was computed.
  double max_jump() const;
};

/// Gap of H_p alone: difference of its two lowest diagonal entries.
double problem_gap(const PauliTermSum& problem);

/// Scans H(s) = s H_p + (1-s) H_D + s(1-s) H_c over s in [0, 1].
GapScan gap_scan(const PauliTermSum& problem, const PauliTermSum& driver, const PauliTermSum& catalyst,
                 const Partition& partition, const ScanOptions& options = {});
GapScan gap_scan(const WeightedGraph& graph, const std::optional<CatalystConfig>& catalyst, const Partition& partition,
                 const ScanOptions& options = {});

enum class PhaseKind { Transition, Crossover };
const char* to_string(PhaseKind kind);

PhaseKind detect_first_order(const GapScan& scan, double jump_threshold = 2.0);

struct ScalingFit {
  std::vector<std::pair<int, double>> points;
  double amplitude = 0.0;
  double rate = 0.0;
  double r_squared = 0.0;
};

/// Least squares of ln delta_min = ln A - b L.
ScalingFit fit_exponential(std::span<const std::pair<int, double>> points);

void write_scan_csv(std::ostream& out, const GapScan& scan);
void write_fit_csv(std::ostream& out, const ScalingFit& fit);

}  // namespace catalab
