// bath.hpp — Ohmic bath description attached to a qubit register.

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace bathflow {

/// Ohmic environment J_i(w) = 2 alpha_i w for w < omega_c, one bath per qubit.
/// `cross` optionally carries symmetric shared-bath couplings alpha_ij with
/// the diagonal pinned to `alpha`.
struct BathSpec {
  double omega_c = 0.0;
  std::vector<double> alpha;
  std::optional<Eigen::MatrixXd> cross;

  int qubit_count() const { return static_cast<int>(alpha.size()); }

  static BathSpec uniform(int n, double alpha_value, double omega_c);

  /// Throws std::invalid_argument on structural violations. Cross couplings
  /// with alpha_ij^2 > alpha_i * alpha_j are admitted with a warning on
  /// stderr (the shared-bath corrections assume the subordinate regime).
  void validate() const;
};

}  // namespace bathflow
