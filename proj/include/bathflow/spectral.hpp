// spectral.hpp — Exact ground states and spectra of Pauli-form Hamiltonians.

#pragma once

#include "bathflow/pauli.hpp"

#include <Eigen/Dense>

namespace bathflow {

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXcd vector;
  double gap = 0.0;  // E1 - E0
  bool degenerate = false;
};

constexpr double kDegeneracyTolFactor = 1e-9;

/// Lowest eigenpair of the dense form of h (n <= max_qubits). The global
/// phase is fixed by making the first nonzero amplitude real positive; the
/// degenerate flag is set when the gap is below 1e-9 * max(1, |E0|), in which
/// case the returned vector is just one eigensolver basis vector of the
/// ground space.
GroundState ground_state(const PauliOperator& h, int max_qubits = kDefaultMaxDenseQubits);

/// All 2^n eigenvalues, ascending.
Eigen::VectorXd spectrum(const PauliOperator& h, int max_qubits = kDefaultMaxDenseQubits);

}  // namespace bathflow
