#include "catalab/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "catalab/error.hpp"
#include "catalab/random.hpp"

namespace catalab {

const char* to_string(SolverMethod method) {
  switch (method) {
    case SolverMethod::Auto: return "auto";
    case SolverMethod::Lanczos: return "lanczos";
    case SolverMethod::Dense: return "dense";
    case SolverMethod::Diagonal: return "diagonal";
  }
  return "unknown";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void apply(const CompiledOperator& op, const double* in, double* out) {
  op.apply({in, op.dim()}, {out, op.dim()});
}

VectorXd random_vector(std::size_t dim, Rng& rng) {
  VectorXd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.uniform(-1.0, 1.0);
  return v;
}

void fix_sign(VectorXd& v) {
  Eigen::Index at = 0;
  v.cwiseAbs().maxCoeff(&at);
  if (v[at] < 0.0) v = -v;
}

double residual(const CompiledOperator& op, const VectorXd& v, double lambda) {
  VectorXd hv(v.size());
  apply(op, v.data(), hv.data());
  return (hv - lambda * v).norm();
}

struct Pairs {
  VectorXd values;
  MatrixXd vectors;  // columns
};

EigenResult to_result(Pairs pairs, const CompiledOperator& op, int k, double tol, SolverMethod method, int iterations) {
  EigenResult r;
  r.method = method;
  r.iterations = iterations;
  const int count = std::min<int>(k, static_cast<int>(pairs.values.size()));
  for (int i = 0; i < count; ++i) {
    VectorXd v = pairs.vectors.col(i);
    fix_sign(v);
    r.eigenvalues.push_back(pairs.values[i]);
    r.residual_norms.push_back(residual(op, v, pairs.values[i]));
    r.eigenvectors.emplace_back(v.data(), v.data() + v.size());
  }
  r.degenerate = count >= 2 && r.eigenvalues[1] - r.eigenvalues[0] < 100.0 * tol;
  return r;
}

Pairs dense_pairs(const CompiledOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.dim());
  MatrixXd m = MatrixXd::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (const auto& [row, value] : op.column(static_cast<std::size_t>(c))) m(static_cast<Eigen::Index>(row), c) += value;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  return {es.eigenvalues(), es.eigenvectors()};
}

Pairs diagonal_pairs(const CompiledOperator& op, int k) {
  const auto diag = op.diagonal();
  std::vector<std::size_t> order(diag.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
  const auto n = static_cast<Eigen::Index>(diag.size());
  Pairs p{VectorXd(k), MatrixXd::Zero(n, k)};
  for (int i = 0; i < k; ++i) {
    p.values[i] = diag[order[i]];
    p.vectors(static_cast<Eigen::Index>(order[i]), i) = 1.0;
  }
  return p;
}

struct Krylov {
  Pairs pairs;
  VectorXd estimates;
  bool converged = false;
  int steps = 0;
};

// Lanczos with full reorthogonalization against the basis and against
// `locked` (already converged eigenvectors). Restarts explicitly from the
// sum of the current Ritz vectors when the basis fills up.
class Lanczos {
 public:
  Lanczos(const CompiledOperator& op, const MatrixXd& locked, const SolverOptions& options, Rng& rng)
      : op_(op), locked_(locked), opt_(options), rng_(rng) {
    const auto free_dim = static_cast<Eigen::Index>(op.dim()) - locked.cols();
    cap_ = std::min<Eigen::Index>(free_dim, options.max_basis);
    basis_.resize(static_cast<Eigen::Index>(op.dim()), cap_);
  }

  Krylov run(int k, VectorXd start) {
    Krylov out;
    if (cap_ < k) return out;
    for (int restart = 0; restart <= opt_.max_restarts; ++restart) {
      const bool done = sweep(k, start, out);
      if (done) return out;
      start = out.pairs.vectors.rowwise().sum();
    }
    return out;
  }

 private:
  // Orthogonalizes w against locked vectors and the first `ncols` basis
  // columns by classical Gram-Schmidt, repeating the pass when it removed
  // most of the norm; returns the remaining norm.
  double orthogonalize(VectorXd& w, Eigen::Index ncols) {
    double norm = w.norm();
    for (int pass = 0; pass < 3; ++pass) {
      if (locked_.cols() > 0) w.noalias() -= locked_ * (locked_.transpose() * w);
      if (ncols > 0) w.noalias() -= basis_.leftCols(ncols) * (basis_.leftCols(ncols).transpose() * w);
      const double after = w.norm();
      if (after > 0.7071 * norm) return after;
      norm = after;
    }
    return norm;
  }

  bool fresh_direction(VectorXd& w, Eigen::Index ncols) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      w = random_vector(op_.dim(), rng_);
      const double before = w.norm();
      const double after = orthogonalize(w, ncols);
      if (after > 1e-8 * before) {
        w /= after;
        return true;
      }
    }
    return false;
  }

  bool sweep(int k, VectorXd start, Krylov& out) {
    VectorXd w = std::move(start);
    double norm = orthogonalize(w, 0);
    if (!(norm > 1e-10)) {
      if (!fresh_direction(w, 0)) return false;
    } else {
      w /= norm;
    }
    basis_.col(0) = w;

    std::vector<double> alpha, beta;
    double anorm = 0.0;
    for (Eigen::Index j = 0;; ++j) {
      apply(op_, basis_.col(j).data(), w.data());
      ++out.steps;
      const double a = basis_.col(j).dot(w);
      alpha.push_back(a);
      w -= a * basis_.col(j);
      if (j > 0) w -= beta.back() * basis_.col(j - 1);
      const double b = orthogonalize(w, j + 1);
      const Eigen::Index m = j + 1;
      anorm = std::max(anorm, std::abs(a) + b + (beta.empty() ? 0.0 : beta.back()));
      const bool breakdown = b <= 1e-13 * std::max(anorm, 1e-300);
      const bool full = m == cap_;

      if (m >= k && (m % 16 == 0 || breakdown || full)) {
        Eigen::SelfAdjointEigenSolver<MatrixXd> tri;
        VectorXd diag = Eigen::Map<VectorXd>(alpha.data(), m);
        VectorXd sub = m > 1 ? VectorXd(Eigen::Map<VectorXd>(beta.data(), m - 1)) : VectorXd();
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const MatrixXd y = tri.eigenvectors().leftCols(k);
        out.pairs.values = tri.eigenvalues().head(k);
        out.pairs.vectors = basis_.leftCols(m) * y;
        out.estimates = (breakdown ? 0.0 : b) * y.row(m - 1).transpose().cwiseAbs();
        if (out.estimates.maxCoeff() <= 0.5 * opt_.tol) {
          // Normalization of Ritz vectors drifts with m; re-normalize and
          // confirm with explicit residuals.
          bool ok = true;
          for (int i = 0; i < k; ++i) {
            out.pairs.vectors.col(i).normalize();
            out.estimates[i] = residual(op_, out.pairs.vectors.col(i), out.pairs.values[i]);
            ok = ok && out.estimates[i] <= opt_.tol;
          }
          out.converged = ok;
          if (ok) return true;
        }
      }
      if (full) return false;
      if (breakdown) {
        // Invariant subspace found before k pairs converged.
        if (!fresh_direction(w, m)) return false;
        beta.push_back(0.0);
      } else {
        w /= b;
        beta.push_back(b);
      }
      basis_.col(m) = w;
    }
  }

  const CompiledOperator& op_;
  const MatrixXd& locked_;
  const SolverOptions& opt_;
  Rng& rng_;
  Eigen::Index cap_ = 0;
  MatrixXd basis_;
};

VectorXd start_vector(std::size_t dim, std::span<const std::vector<double>> warm, Rng& rng) {
  VectorXd v = random_vector(dim, rng);
  v.normalize();
  if (warm.empty()) return v;
  VectorXd s = VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& w : warm) {
    if (w.size() != dim) throw Error(ErrorKind::LengthMismatch, "warm-start vector has the wrong length");
    s += Eigen::Map<const VectorXd>(w.data(), static_cast<Eigen::Index>(dim));
  }
  const double n = s.norm();
  if (n > 0.0) s /= n;
  return s + 1e-2 * v;
}

// Returns std::nullopt-like empty pairs on failure.
bool lanczos_pairs(const CompiledOperator& op, const SolverOptions& opt, std::span<const std::vector<double>> warm,
                   Pairs& pairs, int& steps, double& worst) {
  Rng rng(opt.seed);
  const int k = opt.k;
  MatrixXd none(static_cast<Eigen::Index>(op.dim()), 0);
  Lanczos main(op, none, opt, rng);
  Krylov first = main.run(k, start_vector(op.dim(), warm, rng));
  steps = first.steps;
  worst = first.estimates.size() ? first.estimates.maxCoeff() : std::numeric_limits<double>::infinity();
  if (!first.converged) return false;
  pairs = std::move(first.pairs);
  if (!opt.check_multiplicity) return true;

  // A single Krylov sequence sees one vector per eigenspace. Search the
  // orthogonal complement of what was found for anything lower than the
  // current k-th value; merge and repeat until nothing new turns up.
  for (int round = 0; round < k; ++round) {
    Lanczos extra(op, pairs.vectors, opt, rng);
    Krylov more = extra.run(1, random_vector(op.dim(), rng));
    steps += more.steps;
    if (!more.converged) {
      worst = more.estimates.size() ? more.estimates.maxCoeff() : std::numeric_limits<double>::infinity();
      return false;
    }
    const double candidate = more.pairs.values[0];
    if (candidate >= pairs.values[k - 1] - opt.tol) break;
    const Eigen::Index n = pairs.values.size();
    VectorXd values(n + 1);
    MatrixXd vectors(pairs.vectors.rows(), n + 1);
    values << pairs.values, candidate;
    vectors << pairs.vectors, more.pairs.vectors.col(0);
    std::vector<Eigen::Index> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    pairs.values.resize(k);
    pairs.vectors.resize(vectors.rows(), k);
    for (int i = 0; i < k; ++i) {
      pairs.values[i] = values[order[i]];
      pairs.vectors.col(i) = vectors.col(order[i]);
    }
  }
  return true;
}

}  // namespace

EigenResult dense_eigenpairs(const CompiledOperator& op) {
  Pairs p = dense_pairs(op);
  EigenResult r = to_result(std::move(p), op, static_cast<int>(op.dim()), 1e-12, SolverMethod::Dense, 0);
  return r;
}

EigenResult lowest_eigenpairs(const CompiledOperator& op, const SolverOptions& options,
                              std::span<const std::vector<double>> warm) {
  const std::size_t dim = op.dim();
  if (options.k < 1 || static_cast<std::size_t>(options.k) > dim)
    throw Error(ErrorKind::InvalidRange, "k must lie in [1, 2^L]");
  if (!(options.tol > 0.0)) throw Error(ErrorKind::InvalidRange, "tolerance must be positive");

  const int k = options.k;
  if (op.is_diagonal()) return to_result(diagonal_pairs(op, k), op, k, options.tol, SolverMethod::Diagonal, 0);

  const bool dense = options.method == SolverMethod::Dense ||
                     (options.method == SolverMethod::Auto && dim <= options.dense_threshold) ||
                     static_cast<std::size_t>(k) + 2 >= dim;
  if (dense) return to_result(dense_pairs(op), op, k, options.tol, SolverMethod::Dense, 0);

  Pairs pairs;
  int steps = 0;
  double worst = 0.0;
  if (lanczos_pairs(op, options, warm, pairs, steps, worst))
    return to_result(std::move(pairs), op, k, options.tol, SolverMethod::Lanczos, steps);
  if (dim <= options.fallback_limit) return to_result(dense_pairs(op), op, k, options.tol, SolverMethod::Dense, steps);
  throw Error(ErrorKind::NoConvergence,
              "Lanczos did not converge in " + std::to_string(steps) + " matvecs; best residual " + std::to_string(worst));
}

EigenResult lowest_eigenpairs(const PauliTermSum& op, const SolverOptions& options,
                              std::span<const std::vector<double>> warm) {
  return lowest_eigenpairs(CompiledOperator(op), options, warm);
}

}  // namespace catalab
