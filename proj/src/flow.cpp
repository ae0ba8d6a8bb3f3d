#include "bathflow/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace bathflow {

namespace {

void check_bath_match(const PauliOperator& h, const BathSpec& bath, const char* what) {
  if (h.qubit_count() != bath.qubit_count())
    throw std::invalid_argument(std::string(what) +
                                ": operator and bath qubit counts differ");
}

void check_omega0(const BathSpec& bath, double omega0, const char* what) {
  if (!(omega0 > 0.0) || omega0 > bath.omega_c)
    throw std::invalid_argument(std::string(what) + ": omega0 must lie in (0, omega_c]");
}

PauliOperator scaled(const PauliOperator& h, const BathSpec& bath, double ratio) {
  PauliOperator out(h.qubit_count());
  for (const auto& [s, v] : h.terms()) {
    const double c = bath_exponent(s, bath);
    out.add(s, c == 0.0 ? v : v * std::pow(ratio, c));
  }
  return out;
}

}  // namespace

double bath_exponent(const PauliString& s, const BathSpec& bath) {
  if (s.size() != bath.qubit_count())
    throw std::invalid_argument("bath_exponent: string length does not match bath qubit count");
  double c = 0.0;
  const std::uint64_t x = s.x_bits();
  for (int i = 0; i < s.size(); ++i)
    if ((x >> i) & 1u) c += bath.alpha[static_cast<std::size_t>(i)];
  return c;
}

PauliOperator flow_closed_form(const PauliOperator& h, const BathSpec& bath, double omega0) {
  check_bath_match(h, bath, "flow_closed_form");
  check_omega0(bath, omega0, "flow_closed_form");
  return scaled(h, bath, omega0 / bath.omega_c);
}

FlowResult flow_ode(const PauliOperator& h, const BathSpec& bath, double omega0, int steps) {
  check_bath_match(h, bath, "flow_ode");
  check_omega0(bath, omega0, "flow_ode");
  if (steps < 1) throw std::invalid_argument("flow_ode: steps must be >= 1");

  FlowResult result{omega0, h, {}};
  result.trajectory.reserve(static_cast<std::size_t>(steps) + 1);
  result.trajectory.push_back({bath.omega_c, h});

  // Log-spaced grid omega_k = omega_c * r^k; one exact power factor per step.
  const double r = std::pow(omega0 / bath.omega_c, 1.0 / steps);
  std::vector<std::pair<PauliString, double>> coeffs(h.terms().begin(), h.terms().end());
  std::vector<double> step_factor;
  step_factor.reserve(coeffs.size());
  for (const auto& [s, v] : coeffs) {
    const double c = bath_exponent(s, bath);
    step_factor.push_back(c == 0.0 ? 1.0 : std::pow(r, c));
  }

  double omega = bath.omega_c;
  for (int k = 1; k <= steps; ++k) {
    omega = (k == steps) ? omega0 : bath.omega_c * std::pow(r, k);
    PauliOperator snapshot(h.qubit_count());
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      coeffs[t].second *= step_factor[t];
      snapshot.add(coeffs[t].first, coeffs[t].second);
    }
    result.trajectory.push_back({omega, snapshot});
  }
  result.omega0 = omega0;
  result.effective = result.trajectory.back().op;
  return result;
}

StoppingResult stopping_frequency(const PauliOperator& h, const BathSpec& bath, double eta,
                                  const StoppingOptions& options) {
  check_bath_match(h, bath, "stopping_frequency");
  if (!(eta > 1.0)) throw std::invalid_argument("stopping_frequency: eta must be > 1");
  if (h.empty()) throw std::invalid_argument("stopping_frequency: Hamiltonian must be nonzero");

  // Flowed norm as an explicit function of omega; exponents precomputed.
  std::vector<std::pair<double, double>> mag_exp;  // (|coefficient|, c)
  mag_exp.reserve(h.term_count());
  for (const auto& [s, v] : h.terms()) mag_exp.emplace_back(std::abs(v), bath_exponent(s, bath));
  const auto target = [&](double omega) {
    const double ratio = omega / bath.omega_c;
    double norm = 0.0;
    for (const auto& [mag, c] : mag_exp) norm += (c == 0.0) ? mag : mag * std::pow(ratio, c);
    return eta * norm;
  };

  const double floor = options.floor_factor * bath.omega_c;
  const double tol = options.residual_tol_factor * bath.omega_c;

  double omega = bath.omega_c;
  double next = target(omega);
  if (next > bath.omega_c) return {bath.omega_c, StoppingStatus::kBoundary};

  // The map is monotone increasing, so the iterates decrease monotonically
  // toward the largest fixed point below omega_c. Aitken extrapolation is
  // tried periodically to cut through slow (coupling near 1) convergence.
  double prev2 = omega, prev1 = omega;
  for (int it = 0; it < options.max_iterations; ++it) {
    if (next < floor) return {floor, StoppingStatus::kFullyLocalized};
    if (std::abs(omega - next) <= tol) return {next, StoppingStatus::kConverged};
    prev2 = prev1;
    prev1 = omega;
    omega = next;
    next = target(omega);

    if (it >= 2 && it % 3 == 0) {
      const double d2 = omega - 2.0 * prev1 + prev2;
      if (d2 != 0.0) {
        const double accel = prev2 - (prev1 - prev2) * (prev1 - prev2) / d2;
        if (accel > floor && accel <= bath.omega_c) {
          const double accel_next = target(accel);
          if (std::abs(accel - accel_next) < std::abs(omega - next)) {
            omega = accel;
            next = accel_next;
          }
        }
      }
    }
  }
  throw std::runtime_error("stopping_frequency: fixed-point iteration did not converge");
}

PauliOperator transform_observable(const PauliOperator& q, const BathSpec& bath, double omega0) {
  check_bath_match(q, bath, "transform_observable");
  check_omega0(bath, omega0, "transform_observable");
  return scaled(q, bath, omega0 / bath.omega_c);
}

PauliOperator shared_bath_zz(const PauliOperator& h, const BathSpec& bath, double omega0) {
  check_bath_match(h, bath, "shared_bath_zz");
  check_omega0(bath, omega0, "shared_bath_zz");
  if (!bath.cross) throw std::invalid_argument("shared_bath_zz: bath has no cross couplings");
  bath.validate();

  const int n = bath.qubit_count();
  PauliOperator correction(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double a_ij = (*bath.cross)(i, j);
      if (a_ij == 0.0) continue;
      PauliString zz = PauliString(n).with_axis(i, PauliAxis::Z).with_axis(j, PauliAxis::Z);
      correction.add(zz, -a_ij * (bath.omega_c - omega0) / 2.0);
    }
  }
  return correction;
}

}  // namespace bathflow
