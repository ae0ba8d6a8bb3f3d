// channels.hpp — Bath-induced quantum channels on density matrices. The
// renormalization flow acts on the measurable reduced state as simultaneous
// local dephasing: the sigma_Z components of each qubit are untouched while
// coherences shrink by (omega0/omega_c)^alpha_i.

#pragma once

#include "bathflow/bath.hpp"
#include "bathflow/pauli.hpp"

#include <Eigen/Dense>

namespace bathflow {

/// Hermitian, unit-trace state on n qubits. Construction checks Hermiticity
/// and trace (1e-12); positivity is an invariant verified where eigenvalues
/// are computed anyway, not on every construction.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;

  explicit DensityMatrix(Eigen::MatrixXcd m);
  static DensityMatrix pure(const Eigen::VectorXcd& psi);
  static DensityMatrix maximally_mixed(int n);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  int qubit_count() const { return n_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  DensityMatrix(Eigen::MatrixXcd m, int n) : m_(std::move(m)), n_(n) {}
  Eigen::MatrixXcd m_;
  int n_;

  friend DensityMatrix dephase_qubit(const DensityMatrix&, int, double);
  friend DensityMatrix dephase_all(const DensityMatrix&, const BathSpec&, double);
  friend DensityMatrix shared_bath_state_step(const DensityMatrix&, int, int, double);
};

/// Dephasing of qubit i with retention factor f in [0, 1]:
///   rho -> (1+f)/2 rho + (1-f)/2 Z_i rho Z_i.
/// Diagonal entries are unchanged; coherences across qubit i shrink by f.
DensityMatrix dephase_qubit(const DensityMatrix& rho, int qubit, double f);

/// Sequential dephasing of every qubit with f_i = (omega0/omega_c)^alpha_i.
/// The per-qubit channels commute, so the order does not matter.
DensityMatrix dephase_all(const DensityMatrix& rho, const BathSpec& bath, double omega0);

/// The same channel in the Pauli basis: the state's coefficients scale by
/// (omega0/omega_c)^c(s) exactly like Hamiltonian coefficients. Requires a
/// normalized state (all-identity coefficient 2^-n); that coefficient is
/// untouched, so the trace is preserved.
PauliOperator pauli_scale_state(const PauliOperator& rho_p, const BathSpec& bath, double omega0);

/// Suppression factor of the single GHZ coherence |0..0><1..1| under uniform
/// coupling alpha: ratio^(n*alpha) with ratio = omega0/omega_c.
double ghz_offdiagonal_factor(int n, double alpha, double ratio);

/// One infinitesimal shell of the nonlinear shared-bath transition,
/// symmetrized over (i, j) and (j, i) so the output stays Hermitian:
///   rho -> (1 - 2 eps t) rho + eps (Z_i rho Z_j + Z_j rho Z_i),
/// with t = tr(rho Z_i Z_j). Trace-preserving but not linear in rho.
/// Requires i != j and eps in [0, 1e-2] (linearized shell).
DensityMatrix shared_bath_state_step(const DensityMatrix& rho, int qubit_i, int qubit_j,
                                     double eps);

}  // namespace bathflow
