#include "bathflow/bath.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace bathflow {

namespace {
constexpr double kSymmetryTol = 1e-12;
}

BathSpec BathSpec::uniform(int n, double alpha_value, double omega_c) {
  BathSpec bath;
  bath.omega_c = omega_c;
  bath.alpha.assign(static_cast<std::size_t>(n), alpha_value);
  return bath;
}

void BathSpec::validate() const {
  if (!(omega_c > 0.0)) throw std::invalid_argument("BathSpec: omega_c must be positive");
  if (alpha.empty()) throw std::invalid_argument("BathSpec: at least one qubit coupling required");
  for (double a : alpha)
    if (!(a >= 0.0)) throw std::invalid_argument("BathSpec: couplings alpha_i must be >= 0");
  if (!cross) return;

  const int n = qubit_count();
  const Eigen::MatrixXd& c = *cross;
  if (c.rows() != n || c.cols() != n)
    throw std::invalid_argument("BathSpec: cross matrix must be n x n");
  for (int i = 0; i < n; ++i) {
    if (std::abs(c(i, i) - alpha[static_cast<std::size_t>(i)]) > kSymmetryTol)
      throw std::invalid_argument("BathSpec: cross diagonal must equal alpha");
    for (int j = 0; j < i; ++j) {
      if (std::abs(c(i, j) - c(j, i)) > kSymmetryTol)
        throw std::invalid_argument("BathSpec: cross matrix must be symmetric");
      if (!(c(i, j) >= 0.0))
        throw std::invalid_argument("BathSpec: cross couplings must be >= 0");
      const double bound = alpha[static_cast<std::size_t>(i)] * alpha[static_cast<std::size_t>(j)];
      if (c(i, j) * c(i, j) > bound + kSymmetryTol)
        std::fprintf(stderr,
                     "warning: cross coupling alpha(%d,%d)=%g exceeds sqrt(alpha_%d*alpha_%d); "
                     "shared-bath corrections assume the subordinate regime\n",
                     i, j, c(i, j), i, j);
    }
  }
}

}  // namespace bathflow
