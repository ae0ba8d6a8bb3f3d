#include "bathflow/metrics.hpp"

#include "bathflow/eig.hpp"

#include <cmath>
#include <stdexcept>

namespace bathflow {

double fidelity_pure_mixed(const Eigen::VectorXcd& psi, const DensityMatrix& rho) {
  if (psi.size() != rho.dim())
    throw std::invalid_argument("fidelity_pure_mixed: dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("fidelity_pure_mixed: psi must be normalized");
  return (psi.adjoint() * rho.matrix() * psi)(0).real();
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

double entropy(const DensityMatrix& rho, EntropyBase base) {
  const Eigen::VectorXd lambda = eig::eigenvalues(rho.matrix());
  double h = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    double l = lambda(i);
    if (l < DensityMatrix::kEigenvalueFloor)
      throw std::invalid_argument("entropy: state has eigenvalue below -1e-10");
    if (l <= 0.0) continue;  // 0 log 0 := 0
    h -= l * std::log(l);
  }
  return base == EntropyBase::kBits ? h / std::log(2.0) : h;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  const Eigen::VectorXd lambda =
      eig::eigenvalues(Eigen::MatrixXcd(rho.matrix() - sigma.matrix()));
  return 0.5 * lambda.cwiseAbs().sum();
}

}  // namespace bathflow
