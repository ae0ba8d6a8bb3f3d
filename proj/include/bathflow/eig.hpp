// eig.hpp — Dense Hermitian eigensolvers (LAPACK dsyevr/zheevr behind Eigen
// containers). Real symmetric input is detected and solved in real
// arithmetic, which matters at the 2^12 dimensions the sweeps run at.

#pragma once

#include <Eigen/Dense>

namespace bathflow::eig {

/// Max |imaginary part| <= tol * (1 + max |real part|) entrywise.
bool nearly_real(const Eigen::MatrixXcd& a, double tol = 1e-12);

/// All eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& a);
Eigen::VectorXd eigenvalues(Eigen::MatrixXd a);  // real symmetric; consumes its copy

struct LowestPair {
  double e0 = 0.0;
  double e1 = 0.0;
  Eigen::VectorXcd ground;
};

/// Two lowest eigenvalues and the ground eigenvector of a Hermitian matrix.
/// Requires dimension >= 2.
LowestPair lowest_two(const Eigen::MatrixXcd& a);
LowestPair lowest_two(Eigen::MatrixXd a);

}  // namespace bathflow::eig
