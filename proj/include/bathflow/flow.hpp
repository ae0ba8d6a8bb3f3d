// flow.hpp — Renormalization-group flow of Pauli-string coefficients under
// Ohmic dephasing baths: each string is suppressed by (omega0/omega_c)^c with
// c the summed coupling of the qubits where it anticommutes with sigma_Z.

#pragma once

#include "bathflow/bath.hpp"
#include "bathflow/pauli.hpp"

#include <vector>

namespace bathflow {

/// Combined bath coupling c(s): the sum of alpha_i over the qubits where the
/// string carries X or Y. Zero for strings that commute with every bath
/// coupling.
double bath_exponent(const PauliString& s, const BathSpec& bath);

/// Coefficient flow in closed form: each coefficient is multiplied by
/// (omega0/omega_c)^c(s). Requires 0 < omega0 <= omega_c.
PauliOperator flow_closed_form(const PauliOperator& h, const BathSpec& bath, double omega0);

struct FlowSample {
  double omega0;
  PauliOperator op;
};

struct FlowResult {
  double omega0;
  PauliOperator effective;
  std::vector<FlowSample> trajectory;  // omega0 strictly decreasing, first entry at omega_c
};

/// Integrates d(coefficient)/d(omega0) = c(s) * coefficient / omega0 from
/// omega_c down to omega0 on a log-spaced grid with `steps` steps. The ODE is
/// linear and diagonal in the Pauli basis, so each step applies the exact
/// power-law factor for its sub-interval; a snapshot is recorded at every
/// grid point.
FlowResult flow_ode(const PauliOperator& h, const BathSpec& bath, double omega0, int steps);

enum class StoppingStatus {
  kConverged,       // self-consistent omega0* strictly inside (floor, omega_c)
  kBoundary,        // eta * norm exceeds omega_c already at the initial cutoff
  kFullyLocalized,  // coefficients flow to zero faster than omega0; floor reached
};

struct StoppingResult {
  double omega0_star = 0.0;
  StoppingStatus status = StoppingStatus::kConverged;

  bool converged() const { return status == StoppingStatus::kConverged; }
};

struct StoppingOptions {
  double residual_tol_factor = 1e-12;  // |omega - eta*norm| <= factor * omega_c
  double floor_factor = 1e-6;          // fully-localized floor at factor * omega_c
  int max_iterations = 500000;
};

/// Largest self-consistent cutoff omega0* solving
///   omega0 = eta * coefficient_norm(flow_closed_form(h, bath, omega0)),
/// found by monotone fixed-point iteration downward from omega_c (with Aitken
/// acceleration for couplings near the critical value). Requires eta > 1 and
/// a nonzero Hamiltonian. If the scaling premise fails already at omega_c
/// (eta * norm > omega_c) the result is omega_c with the boundary flag; if
/// the iteration falls below floor_factor * omega_c every relevant coupling
/// flows to zero faster than omega0 and the fully-localized flag is set.
StoppingResult stopping_frequency(const PauliOperator& h, const BathSpec& bath, double eta,
                                  const StoppingOptions& options = {});

/// Measurement-accessible observables transform exactly like the Hamiltonian
/// at leading order; identity terms are untouched, so <1> stays 1.
PauliOperator transform_observable(const PauliOperator& q, const BathSpec& bath, double omega0);

/// Dominant correction from bath modes shared between qubit pairs: an
/// additive Z_i Z_j term with coefficient -alpha_ij * (omega_c - omega0) / 2
/// for every cross coupling alpha_ij > 0. Generated terms commute with all
/// bath couplings (their own flow exponent is zero). Subleading pieces of
/// order |H|/omega are not included. Requires bath.cross.
PauliOperator shared_bath_zz(const PauliOperator& h, const BathSpec& bath, double omega0);

}  // namespace bathflow
