#include "bathflow/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bathflow {

void AFMInstance::validate() const {
  if (n < 1 || n > PauliString::kMaxQubits)
    throw std::invalid_argument("AFMInstance: qubit count must be in [1, 64]");
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("AFMInstance: s must lie in [0, 1]");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i == j) throw std::invalid_argument("AFMInstance: self-loop edge");
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("AFMInstance: edge index out of range");
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) throw std::invalid_argument("AFMInstance: duplicate edge");
  }
}

AFMInstance AFMInstance::with_s(double s_value) const {
  AFMInstance out = *this;
  out.s = s_value;
  return out;
}

PauliOperator afm_hamiltonian(const AFMInstance& inst) {
  inst.validate();
  PauliOperator h(inst.n);
  const double s = inst.s;
  for (int i = 0; i < inst.n; ++i) h.add(PauliString::single(inst.n, i, PauliAxis::Z), s);
  for (auto [i, j] : inst.edges) {
    h.add(PauliString(inst.n).with_axis(i, PauliAxis::Z).with_axis(j, PauliAxis::Z),
          s * (1.0 - s));
    h.add(PauliString(inst.n).with_axis(i, PauliAxis::X).with_axis(j, PauliAxis::X), s);
  }
  return h;
}

namespace {

// splitmix64; pinned here so instances are reproducible across platforms and
// standard-library versions.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound); modulo bias is irrelevant at these sizes.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

std::vector<int> shuffled_indices(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(p[static_cast<std::size_t>(i)],
              p[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
  return p;
}

}  // namespace

AFMInstance random_afm_instance(int n, int degree, std::uint64_t seed) {
  if (n < 2 || degree < 1 || degree >= n || (static_cast<long long>(n) * degree) % 2 != 0)
    throw std::invalid_argument("random_afm_instance: infeasible (need degree < n, degree*n even)");
  if (degree == 1 && n != 2)
    throw std::invalid_argument("random_afm_instance: 1-regular graphs are disconnected for n > 2");
  if (degree >= 2 && n < 3)
    throw std::invalid_argument("random_afm_instance: cycles need at least 3 qubits");

  Rng rng{seed ^ 0xa076'1d64'78bd'642fULL};
  const int cycles = degree / 2;
  const bool matching = degree % 2 != 0;

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::set<std::pair<int, int>> edges;
    bool clash = false;
    for (int c = 0; c < cycles && !clash; ++c) {
      const std::vector<int> p = shuffled_indices(n, rng);
      for (int t = 0; t < n; ++t) {
        auto e = std::minmax(p[static_cast<std::size_t>(t)],
                             p[static_cast<std::size_t>((t + 1) % n)]);
        if (!edges.insert(e).second) {
          clash = true;
          break;
        }
      }
    }
    if (!clash && matching) {
      const std::vector<int> p = shuffled_indices(n, rng);
      for (int t = 0; t + 1 < n; t += 2) {
        auto e = std::minmax(p[static_cast<std::size_t>(t)], p[static_cast<std::size_t>(t + 1)]);
        if (!edges.insert(e).second) {
          clash = true;
          break;
        }
      }
    }
    if (clash) continue;

    // The first cycle is Hamiltonian, so the graph is connected for
    // degree >= 2; degree 1 is the single-edge n = 2 case.
    AFMInstance inst;
    inst.n = n;
    inst.edges.assign(edges.begin(), edges.end());
    inst.s = 0.0;
    return inst;
  }
  throw std::runtime_error("random_afm_instance: could not build edge-disjoint layers");
}

Eigen::VectorXcd ghz_state(int n) {
  if (n < 1 || n > kDefaultMaxDenseQubits)
    throw std::invalid_argument("ghz_state: qubit count out of range");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi(0) = 1.0 / std::sqrt(2.0);
  psi(dim - 1) = 1.0 / std::sqrt(2.0);
  return psi;
}

PauliOperator single_spin_boson(double delta) {
  PauliOperator h(1);
  h.add(PauliString("X"), delta);
  return h;
}

std::string format_edges(const std::vector<std::pair<int, int>>& edges) {
  std::string out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(edges[k].first) + "-" + std::to_string(edges[k].second);
  }
  return out;
}

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("parse_edges: expected 'i-j' in '" + item + "'");
    try {
      const int i = std::stoi(item.substr(0, dash));
      const int j = std::stoi(item.substr(dash + 1));
      edges.emplace_back(std::min(i, j), std::max(i, j));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("parse_edges: bad edge '" + item + "'");
    }
  }
  if (edges.empty()) throw std::invalid_argument("parse_edges: empty edge list");
  return edges;
}

}  // namespace bathflow
