// models.hpp — Benchmark Hamiltonians and reference states.

#pragma once

#include "bathflow/pauli.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bathflow {

/// Antiferromagnetic annealing instance: qubit count, coupled pairs, and the
/// annealing parameter s in [0, 1].
struct AFMInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, stored (lo, hi)
  double s = 0.0;

  void validate() const;
  AFMInstance with_s(double s_value) const;
};

/// H(s) = s sum_i Z_i + s(1-s) sum_edges Z_i Z_j + s sum_edges X_i X_j.
PauliOperator afm_hamiltonian(const AFMInstance& inst);

/// Deterministic connected degree-regular instance: one seeded Hamiltonian
/// cycle per two units of degree plus a perfect matching for odd degree, all
/// edge-disjoint. The annealing parameter is left at 0 for the caller to set.
/// Requires degree * n even, degree < n (and n == 2 for degree 1, since
/// larger 1-regular graphs cannot be connected).
AFMInstance random_afm_instance(int n, int degree, std::uint64_t seed);

/// (|0..0> + |1..1>)/sqrt(2).
Eigen::VectorXcd ghz_state(int n);

/// Single-qubit tunneling Hamiltonian {X: delta}.
PauliOperator single_spin_boson(double delta);

/// Edge-list text form "0-1,1-2,2-0".
std::string format_edges(const std::vector<std::pair<int, int>>& edges);
std::vector<std::pair<int, int>> parse_edges(const std::string& text);

}  // namespace bathflow
