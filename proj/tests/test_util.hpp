// test_util.hpp — Pinned-seed generators shared across the test binaries.

#pragma once

#include "bathflow/channels.hpp"
#include "bathflow/pauli.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>

namespace testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive bounds
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double gaussian(std::mt19937_64& rng) {
  // Box-Muller; keeps values reproducible across standard libraries.
  const double u1 = std::max(uniform(rng, 0.0, 1.0), 1e-300);
  const double u2 = uniform(rng, 0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline bathflow::PauliString random_pauli_string(std::mt19937_64& rng, int n) {
  bathflow::PauliString s(n);
  for (int i = 0; i < n; ++i)
    s = s.with_axis(i, static_cast<bathflow::PauliAxis>(uniform_int(rng, 0, 3)));
  return s;
}

inline bathflow::PauliOperator random_pauli_operator(std::mt19937_64& rng, int n, int max_terms,
                                                     double coeff_scale = 1.0) {
  bathflow::PauliOperator op(n);
  const int terms = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t)
    op.add(random_pauli_string(rng, n), coeff_scale * uniform(rng, -1.0, 1.0));
  return op;
}

inline Eigen::VectorXcd random_state_vector(std::mt19937_64& rng, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    psi(i) = std::complex<double>(gaussian(rng), gaussian(rng));
  psi.normalize();
  return psi;
}

/// Full-rank random state G G^dagger / tr.
inline bathflow::DensityMatrix random_density_matrix(std::mt19937_64& rng, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r)
      g(r, c) = std::complex<double>(gaussian(rng), gaussian(rng));
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return bathflow::DensityMatrix(std::move(rho));
}

}  // namespace testutil
