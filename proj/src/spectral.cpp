#include "bathflow/spectral.hpp"

#include "bathflow/eig.hpp"

#include <cmath>
#include <complex>

namespace bathflow {

namespace {

void fix_phase(Eigen::VectorXcd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-12) {
      v *= std::conj(v(i)) / mag;
      return;
    }
  }
}

}  // namespace

GroundState ground_state(const PauliOperator& h, int max_qubits) {
  eig::LowestPair pair = real_representable(h) ? eig::lowest_two(to_dense_real(h, max_qubits))
                                               : eig::lowest_two(to_dense(h, max_qubits));
  GroundState out;
  out.energy = pair.e0;
  out.gap = pair.e1 - pair.e0;
  out.vector = std::move(pair.ground);
  out.vector.normalize();
  fix_phase(out.vector);
  out.degenerate = out.gap < kDegeneracyTolFactor * std::max(1.0, std::abs(out.energy));
  return out;
}

Eigen::VectorXd spectrum(const PauliOperator& h, int max_qubits) {
  if (real_representable(h)) return eig::eigenvalues(to_dense_real(h, max_qubits));
  return eig::eigenvalues(to_dense(h, max_qubits));
}

}  // namespace bathflow
