#include "catalab/gap_scan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>

#include "catalab/error.hpp"
#include "catalab/hamiltonian.hpp"

namespace catalab {

namespace {

// Runs fn(i) for i in [0, n), threaded over i when asked; the first
// exception (by index) is rethrown after the loop.
template <typename Fn>
void for_each_index(std::size_t n, bool parallel, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) if (parallel && n > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

class Evaluator {
 public:
  Evaluator(const PauliTermSum& problem, const PauliTermSum& driver, const PauliTermSum& catalyst,
            const Partition& partition, const SolverOptions& solver)
      : problem_(problem),
        driver_(driver),
        catalyst_(catalyst),
        order_(order_parameter_diagonal(problem.n_qubits(), partition)),
        solver_(solver) {
    // A stoquastic, irreducible H(s) has a nondegenerate ground state, so one
    // Krylov sequence suffices for the gap.
    if (catalyst.is_stoquastic()) solver_.check_multiplicity = false;
  }

  ScanPoint operator()(double s, std::vector<std::vector<double>>* warm = nullptr) const {
    const CompiledOperator op(anneal_hamiltonian(s, problem_, driver_, catalyst_));
    std::span<const std::vector<double>> start;
    if (warm) start = *warm;
    EigenResult r = lowest_eigenpairs(op, solver_, start);
    ScanPoint p;
    p.s = s;
    p.degenerate = r.degenerate;
    if (r.degenerate && solver_.k < 4 && op.dim() >= 8) {
      SolverOptions wide = solver_;
      wide.k = 4;
      wide.check_multiplicity = true;
      r = lowest_eigenpairs(op, wide);
    }
    p.gap = r.eigenvalues[1] - r.eigenvalues[0];
    double order = 0.0;
    const auto& v = r.eigenvectors[0];
    for (std::size_t b = 0; b < v.size(); ++b) order += v[b] * v[b] * order_[b];
    p.order_param = order;
    if (warm) {
      warm->assign(r.eigenvectors.begin(), r.eigenvectors.begin() + 2);
    }
    return p;
  }

 private:
  const PauliTermSum& problem_;
  const PauliTermSum& driver_;
  const PauliTermSum& catalyst_;
  std::vector<double> order_;
  SolverOptions solver_;
};

std::vector<ScanPoint> evaluate_all(const Evaluator& eval, const std::vector<double>& grid, bool parallel) {
  std::vector<ScanPoint> out(grid.size());
  for_each_index(grid.size(), parallel, [&](std::size_t i) { out[i] = eval(grid[i]); });
  return out;
}

void check_partition(int n_qubits, const Partition& partition) {
  std::uint64_t seen = 0;
  for (const auto* set : {&partition.a, &partition.b}) {
    std::uint64_t mine = 0;
    for (int v : *set) {
      if (v < 0 || v >= n_qubits) throw Error(ErrorKind::InvalidSubset, "partition vertex out of range");
      mine |= std::uint64_t{1} << v;
    }
    if (mine & seen) throw Error(ErrorKind::Overlap, "partitions A and B intersect");
    seen |= mine;
  }
}

}  // namespace

std::vector<double> order_parameter_diagonal(int n_qubits, const Partition& partition) {
  check_partition(n_qubits, partition);
  std::uint64_t a = 0, b = 0;
  for (int v : partition.a) a |= std::uint64_t{1} << v;
  for (int v : partition.b) b |= std::uint64_t{1} << v;
  const int na = std::popcount(a), nb = std::popcount(b);
  std::vector<double> out(std::size_t{1} << n_qubits);
  // A set bit is spin down: each contributes -2 relative to all-up.
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (na - 2 * std::popcount(i & a)) - (nb - 2 * std::popcount(i & b));
  return out;
}

double order_parameter(std::span<const double> state, const Partition& partition) {
  if (state.empty() || !std::has_single_bit(state.size()))
    throw Error(ErrorKind::LengthMismatch, "state length is not a power of two");
  const int n = std::countr_zero(state.size());
  const auto diag = order_parameter_diagonal(n, partition);
  double total = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) total += state[i] * state[i] * diag[i];
  return total;
}

double problem_gap(const PauliTermSum& problem) {
  if (problem.dim() < 2) throw Error(ErrorKind::InvalidSpec, "problem gap needs at least two states");
  const CompiledOperator op(problem);
  if (op.is_diagonal()) {
    std::vector<double> d(op.diagonal().begin(), op.diagonal().end());
    std::partial_sort(d.begin(), d.begin() + 2, d.end());
    return d[1] - d[0];
  }
  const EigenResult r = lowest_eigenpairs(op);
  return r.eigenvalues[1] - r.eigenvalues[0];
}

std::vector<ScanPoint> GapScan::points() const {
  std::vector<ScanPoint> all;
  all.reserve(coarse.size() + refined.size() + window.size());
  all.insert(all.end(), coarse.begin(), coarse.end());
  all.insert(all.end(), refined.begin(), refined.end());
  all.insert(all.end(), window.begin(), window.end());
  std::stable_sort(all.begin(), all.end(), [](const ScanPoint& x, const ScanPoint& y) { return x.s < y.s; });
  all.erase(std::unique(all.begin(), all.end(), [](const ScanPoint& x, const ScanPoint& y) { return x.s == y.s; }),
            all.end());
  return all;
}

double GapScan::max_jump() const {
  double jump = 0.0;
  if (!window.empty()) {
    for (std::size_t i = 0; i + 4 < window.size(); ++i)
      jump = std::max(jump, std::abs(window[i + 4].order_param - window[i].order_param));
    return jump;
  }
  for (std::size_t i = 0; i + 1 < coarse.size(); ++i)
    jump = std::max(jump, std::abs(coarse[i + 1].order_param - coarse[i].order_param));
  return jump;
}

GapScan gap_scan(const PauliTermSum& problem, const PauliTermSum& driver, const PauliTermSum& catalyst,
                 const Partition& partition, const ScanOptions& options) {
  if (options.grid_points < 21) throw Error(ErrorKind::InvalidRange, "coarse grid needs at least 21 points");
  if (options.solver.k < 2) throw Error(ErrorKind::InvalidRange, "gap scan needs at least two eigenpairs");
  if (options.subgrid_points < 3) throw Error(ErrorKind::InvalidRange, "subgrid needs at least 3 points");
  if (!(options.refine_tol > 0.0)) throw Error(ErrorKind::InvalidRange, "refinement tolerance must be positive");
  if (!(options.jump_step > 0.0) || options.window_steps < 4)
    throw Error(ErrorKind::InvalidRange, "jump window needs a positive step and at least 4 samples per side");
  if (problem.n_qubits() != driver.n_qubits() || problem.n_qubits() != catalyst.n_qubits())
    throw Error(ErrorKind::DimensionMismatch, "scan operands act on different registers");
  check_partition(problem.n_qubits(), partition);

  const Evaluator eval(problem, driver, catalyst, partition, options.solver);
  GapScan scan;
  scan.jump_step = options.jump_step;
  scan.problem_gap = problem_gap(problem);

  const int n = options.grid_points;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / (n - 1);
  scan.coarse = evaluate_all(eval, grid, options.parallel);

  auto argmin = [](const std::vector<ScanPoint>& pts) {
    return static_cast<std::size_t>(std::min_element(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
                                      return x.gap < y.gap;
                                    }) - pts.begin());
  };

  // Subgrid over the coarse bracket.
  const std::size_t i = argmin(scan.coarse);
  double lo = scan.coarse[i == 0 ? 0 : i - 1].s;
  double hi = scan.coarse[std::min<std::size_t>(i + 1, n - 1)].s;
  const int m = options.subgrid_points;
  std::vector<double> sub;
  for (int j = 1; j + 1 < m; ++j) sub.push_back(lo + (hi - lo) * j / (m - 1));
  std::vector<ScanPoint> subpts = evaluate_all(eval, sub, options.parallel);
  std::vector<ScanPoint> local{scan.coarse[i == 0 ? 0 : i - 1]};
  local.insert(local.end(), subpts.begin(), subpts.end());
  local.push_back(scan.coarse[std::min<std::size_t>(i + 1, n - 1)]);
  scan.refined = subpts;
  const std::size_t j = argmin(local);
  lo = local[j == 0 ? 0 : j - 1].s;
  hi = local[std::min(j + 1, local.size() - 1)].s;

  // Golden-section search, warm-started from the previous probe.
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<std::vector<double>> warm;
  double c = hi - ratio * (hi - lo), d = lo + ratio * (hi - lo);
  ScanPoint pc = eval(c, &warm), pd = eval(d, &warm);
  scan.refined.push_back(pc);
  scan.refined.push_back(pd);
  while (hi - lo > options.refine_tol) {
    if (pc.gap < pd.gap) {
      hi = d;
      d = c;
      pd = pc;
      c = hi - ratio * (hi - lo);
      pc = eval(c, &warm);
      scan.refined.push_back(pc);
    } else {
      lo = c;
      c = d;
      pc = pd;
      d = lo + ratio * (hi - lo);
      pd = eval(d, &warm);
      scan.refined.push_back(pd);
    }
  }

  scan.delta_min = std::numeric_limits<double>::infinity();
  for (const auto* set : {&scan.coarse, &scan.refined})
    for (const ScanPoint& p : *set)
      if (p.gap < scan.delta_min || (p.gap == scan.delta_min && p.s < scan.s_star)) {
        scan.delta_min = p.gap;
        scan.s_star = p.s;
      }

  if (options.resolve_jump) {
    const double q = options.jump_step / 4.0;
    std::vector<double> win;
    for (int k = -options.window_steps; k <= options.window_steps; ++k) {
      const double s = scan.s_star + k * q;
      if (s >= 0.0 && s <= 1.0) win.push_back(s);
    }
    scan.window = evaluate_all(eval, win, options.parallel);
  }
  return scan;
}

GapScan gap_scan(const WeightedGraph& graph, const std::optional<CatalystConfig>& catalyst, const Partition& partition,
                 const ScanOptions& options) {
  const int n = graph.size();
  const PauliTermSum hc = catalyst ? n_local_catalyst(*catalyst, n) : PauliTermSum(n);
  return gap_scan(problem_hamiltonian(graph), driver_hamiltonian(n), hc, partition, options);
}

const char* to_string(PhaseKind kind) { return kind == PhaseKind::Transition ? "transition" : "crossover"; }

PhaseKind detect_first_order(const GapScan& scan, double jump_threshold) {
  return scan.max_jump() > jump_threshold ? PhaseKind::Transition : PhaseKind::Crossover;
}

ScalingFit fit_exponential(std::span<const std::pair<int, double>> points) {
  if (points.size() < 3) throw Error(ErrorKind::InvalidRange, "exponential fit needs at least three points");
  ScalingFit fit;
  fit.points.assign(points.begin(), points.end());
  double sx = 0, sy = 0;
  for (const auto& [l, gap] : points) {
    if (!(gap > 0.0)) throw Error(ErrorKind::NonpositiveGap, "minimum gap must be positive to take its logarithm");
    sx += l;
    sy += std::log(gap);
  }
  const double count = static_cast<double>(points.size());
  const double mx = sx / count, my = sy / count;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [l, gap] : points) {
    const double dx = l - mx, dy = std::log(gap) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw Error(ErrorKind::InvalidRange, "exponential fit needs at least two distinct sizes");
  const double slope = sxy / sxx;
  fit.rate = slope == 0.0 ? 0.0 : -slope;
  fit.amplitude = std::exp(my - slope * mx);
  double ss_res = 0.0;
  for (const auto& [l, gap] : points) {
    const double r = std::log(gap) - (my + slope * (l - mx));
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

void write_scan_csv(std::ostream& out, const GapScan& scan) {
  const auto old = out.precision(17);
  out << "s,gap,order_param,flag_degenerate\n";
  for (const ScanPoint& p : scan.points())
    out << p.s << ',' << p.gap << ',' << p.order_param << ',' << (p.degenerate ? 1 : 0) << '\n';
  out << "#delta_min=" << scan.delta_min << '\n'
      << "#s_star=" << scan.s_star << '\n'
      << "#problem_gap=" << scan.problem_gap << '\n';
  out.precision(old);
}

void write_fit_csv(std::ostream& out, const ScalingFit& fit) {
  const auto old = out.precision(17);
  out << "L,delta_min\n";
  for (const auto& [l, gap] : fit.points) out << l << ',' << gap << '\n';
  out << "#A=" << fit.amplitude << '\n' << "#b=" << fit.rate << '\n' << "#r2=" << fit.r_squared << '\n';
  out.precision(old);
}

}  // namespace catalab
