// metrics.hpp — State-comparison and mixedness measures.

#pragma once

#include "bathflow/channels.hpp"

#include <Eigen/Dense>

namespace bathflow {

enum class EntropyBase { kBits, kNats };

/// <psi|rho|psi>: overlap between a pure reference and a mixed state. For a
/// pure rho = |phi><phi| this is |<psi|phi>|^2 (the squared-overlap
/// convention; no square root is taken).
double fidelity_pure_mixed(const Eigen::VectorXcd& psi, const DensityMatrix& rho);

/// tr(rho^2): 1 for pure states, 2^-n for the maximally mixed state.
double purity(const DensityMatrix& rho);

/// Von Neumann entropy -sum lambda log lambda, in bits by default.
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything more negative is
/// rejected as an invalid state.
double entropy(const DensityMatrix& rho, EntropyBase base = EntropyBase::kBits);

/// (1/2) sum |eigenvalues(rho - sigma)|, in [0, 1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Per-point metric bundle produced by the sweep pipeline.
struct MetricsRecord {
  double fidelity_sb = 0.0;       // |<psi_ideal|psi_eff>|^2
  double fidelity_reduced = 0.0;  // <psi_ideal|rho_r|psi_ideal>
  double purity = 0.0;
  double entropy = 0.0;
  double trace_distance = 0.0;
};

}  // namespace bathflow
