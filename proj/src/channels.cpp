#include "bathflow/channels.hpp"

#include "bathflow/flow.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace bathflow {

namespace {

int qubits_from_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if (dim < 2 || (Eigen::Index{1} << n) != dim)
    throw std::invalid_argument("DensityMatrix: dimension must be a power of two >= 2");
  return n;
}

// Index-space bit of qubit i (qubit 0 is the most significant of n bits).
Eigen::Index qubit_bit(int n, int qubit) { return Eigen::Index{1} << (n - 1 - qubit); }

void check_qubit(int n, int qubit, const char* what) {
  if (qubit < 0 || qubit >= n)
    throw std::invalid_argument(std::string(what) + ": qubit index out of range");
}

// In-place rho(r,c) *= f for all entries whose row/column bits differ at `qubit`.
void scale_coherences(Eigen::MatrixXcd& m, int n, int qubit, double f) {
  const Eigen::Index bit = qubit_bit(n, qubit);
  const Eigen::Index dim = m.rows();
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index r = 0; r < dim; ++r)
      if (((r ^ c) & bit) != 0) m(r, c) *= f;
}

}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)), n_(qubits_from_dim(m_.rows())) {
  if (m_.cols() != m_.rows()) throw std::invalid_argument("DensityMatrix: matrix must be square");
  const double herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  const std::complex<double> tr = m_.trace();
  if (std::abs(tr - std::complex<double>(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace must be 1");
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const Eigen::Index dim = psi.size();
  const int n = qubits_from_dim(dim);
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("DensityMatrix::pure: state vector must be normalized");
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) m.col(c) = psi * std::conj(psi(c));
  return DensityMatrix(std::move(m), n);
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(std::move(m), n);
}

DensityMatrix dephase_qubit(const DensityMatrix& rho, int qubit, double f) {
  check_qubit(rho.qubit_count(), qubit, "dephase_qubit");
  if (!(f >= 0.0 && f <= 1.0))
    throw std::invalid_argument("dephase_qubit: retention factor f must be in [0, 1]");
  Eigen::MatrixXcd m = rho.matrix();
  scale_coherences(m, rho.qubit_count(), qubit, f);
  return DensityMatrix(std::move(m), rho.qubit_count());
}

DensityMatrix dephase_all(const DensityMatrix& rho, const BathSpec& bath, double omega0) {
  if (bath.qubit_count() != rho.qubit_count())
    throw std::invalid_argument("dephase_all: bath and state qubit counts differ");
  if (!(omega0 > 0.0) || omega0 > bath.omega_c)
    throw std::invalid_argument("dephase_all: omega0 must lie in (0, omega_c]");
  const double ratio = omega0 / bath.omega_c;
  Eigen::MatrixXcd m = rho.matrix();
  for (int i = 0; i < rho.qubit_count(); ++i) {
    const double f = std::pow(ratio, bath.alpha[static_cast<std::size_t>(i)]);
    scale_coherences(m, rho.qubit_count(), i, f);
  }
  return DensityMatrix(std::move(m), rho.qubit_count());
}

PauliOperator pauli_scale_state(const PauliOperator& rho_p, const BathSpec& bath, double omega0) {
  if (rho_p.qubit_count() != bath.qubit_count())
    throw std::invalid_argument("pauli_scale_state: bath and state qubit counts differ");
  if (!(omega0 > 0.0) || omega0 > bath.omega_c)
    throw std::invalid_argument("pauli_scale_state: omega0 must lie in (0, omega_c]");
  const double expected = std::pow(0.5, rho_p.qubit_count());
  if (std::abs(rho_p.coefficient(PauliString(rho_p.qubit_count())) - expected) > 1e-12)
    throw std::invalid_argument(
        "pauli_scale_state: invalid normalization, all-identity coefficient must be 2^-n");

  const double ratio = omega0 / bath.omega_c;
  PauliOperator out(rho_p.qubit_count());
  for (const auto& [s, v] : rho_p.terms()) {
    const double c = bath_exponent(s, bath);
    out.add(s, c == 0.0 ? v : v * std::pow(ratio, c));
  }
  return out;
}

double ghz_offdiagonal_factor(int n, double alpha, double ratio) {
  if (n < 1) throw std::invalid_argument("ghz_offdiagonal_factor: n must be >= 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("ghz_offdiagonal_factor: alpha must be >= 0");
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw std::invalid_argument("ghz_offdiagonal_factor: ratio must lie in (0, 1]");
  return std::pow(ratio, static_cast<double>(n) * alpha);
}

DensityMatrix shared_bath_state_step(const DensityMatrix& rho, int qubit_i, int qubit_j,
                                     double eps) {
  const int n = rho.qubit_count();
  check_qubit(n, qubit_i, "shared_bath_state_step");
  check_qubit(n, qubit_j, "shared_bath_state_step");
  if (qubit_i == qubit_j)
    throw std::invalid_argument("shared_bath_state_step: qubits must be distinct");
  if (!(eps >= 0.0 && eps <= 1e-2))
    throw std::invalid_argument(
        "shared_bath_state_step: eps must lie in [0, 1e-2] (infinitesimal shell)");

  const Eigen::Index bi = qubit_bit(n, qubit_i);
  const Eigen::Index bj = qubit_bit(n, qubit_j);
  const Eigen::MatrixXcd& m = rho.matrix();
  const Eigen::Index dim = m.rows();

  double t = 0.0;  // tr(rho Z_i Z_j)
  for (Eigen::Index d = 0; d < dim; ++d) {
    const int sign = (std::popcount(static_cast<std::uint64_t>(d) &
                                    static_cast<std::uint64_t>(bi | bj)) %
                          2 ==
                      0)
                         ? 1
                         : -1;
    t += sign * m(d, d).real();
  }

  Eigen::MatrixXcd out(dim, dim);
  const double keep = 1.0 - 2.0 * eps * t;
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double si = ((r & bi) == 0 ? 1.0 : -1.0) * ((c & bj) == 0 ? 1.0 : -1.0);
      const double sj = ((r & bj) == 0 ? 1.0 : -1.0) * ((c & bi) == 0 ? 1.0 : -1.0);
      out(r, c) = (keep + eps * (si + sj)) * m(r, c);
    }
  }
  return DensityMatrix(std::move(out), n);
}

}  // namespace bathflow
