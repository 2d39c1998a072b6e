#include "catalab/perturbation.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "catalab/error.hpp"

namespace catalab {

EnergyCorrections energy_corrections(const EigenResult& unperturbed, const PauliTermSum& perturbation, double lambda,
                                     int target) {
  const std::size_t dim = perturbation.dim();
  if (unperturbed.eigenvalues.size() != dim || unperturbed.eigenvectors.size() != dim)
    throw Error(ErrorKind::DimensionMismatch, "perturbation theory needs the complete unperturbed spectrum");
  if (target < 0 || static_cast<std::size_t>(target) >= dim) throw Error(ErrorKind::InvalidRange, "target out of range");

  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd psi(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (unperturbed.eigenvectors[i].size() != dim) throw Error(ErrorKind::LengthMismatch, "eigenvector length");
    psi.col(i) = Eigen::Map<const Eigen::VectorXd>(unperturbed.eigenvectors[i].data(), n);
  }
  const Eigen::VectorXd energy = Eigen::Map<const Eigen::VectorXd>(unperturbed.eigenvalues.data(), n);

  const double e_n = energy[target];
  double scale = 1.0;
  for (Eigen::Index m = 0; m < n; ++m) scale = std::max(scale, std::abs(energy[m]));
  for (Eigen::Index m = 0; m < n; ++m)
    if (m != target && std::abs(e_n - energy[m]) < 1e-10 * scale)
      throw Error(ErrorKind::DegenerateTarget, "target level is degenerate");

  // V in the unperturbed eigenbasis.
  const CompiledOperator v(perturbation);
  Eigen::MatrixXd vpsi(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    v.apply({psi.col(i).data(), dim}, {vpsi.col(i).data(), dim});
  const Eigen::MatrixXd vm = psi.transpose() * vpsi;

  Eigen::VectorXd a = Eigen::VectorXd::Zero(n);  // V_mn / (E_n - E_m)
  double second = 0.0, norm2 = 0.0;
  for (Eigen::Index m = 0; m < n; ++m) {
    if (m == target) continue;
    const double denom = e_n - energy[m];
    a[m] = vm(m, target) / denom;
    second += vm(m, target) * vm(m, target) / denom;
    norm2 += a[m] * a[m];
  }
  const double connected = a.dot(vm * a);

  EnergyCorrections c;
  c.first = lambda * vm(target, target);
  c.second = lambda * lambda * second;
  c.third_connected = lambda * lambda * lambda * connected;
  c.third_renormalization = -lambda * lambda * lambda * vm(target, target) * norm2;
  c.third = c.third_connected + c.third_renormalization;
  return c;
}

}  // namespace catalab
