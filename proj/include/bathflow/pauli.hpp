// pauli.hpp — Sparse real-coefficient Pauli-string operators and dense conversion.

#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bathflow {

/// Dense realization of an operator on n qubits (dimension 2^n).
using DenseOperator = Eigen::MatrixXcd;

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis a);
PauliAxis axis_from_char(char c);

/// Tensor product of single-qubit Pauli factors. Qubit 0 is the leftmost
/// factor, i.e. the most significant bit of a computational-basis index.
/// Internally two bit masks (X-part, Z-part): X and Y set the X bit,
/// Y and Z set the Z bit.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  explicit PauliString(int n);  // identity string on n qubits
  PauliString(std::initializer_list<PauliAxis> axes);
  explicit PauliString(std::string_view letters);  // e.g. "XXI"

  static PauliString single(int n, int qubit, PauliAxis a);

  int size() const { return n_; }
  PauliAxis axis(int qubit) const;
  PauliString with_axis(int qubit, PauliAxis a) const;

  std::uint64_t x_bits() const { return x_; }  // set where axis is X or Y
  std::uint64_t z_bits() const { return z_; }  // set where axis is Y or Z

  int weight() const;   // number of non-identity sites
  int y_count() const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  std::string str() const;

  friend bool operator==(const PauliString& a, const PauliString& b) = default;
  // Lexicographic by qubit with I < X < Y < Z; gives a stable canonical order.
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b);

 private:
  int n_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;

  void check_qubit(int qubit) const;
};

/// Qubit indices where the string anticommutes with a local sigma_Z, i.e.
/// the sites carrying X or Y.
std::vector<int> anticommuting_support(const PauliString& s);

/// Hermitian operator as a finite real-coefficient combination of Pauli
/// strings. Coefficients with |value| below kPruneTolerance are dropped.
/// Also used for states in the Pauli basis (coefficients then carry the
/// 2^-n normalization).
class PauliOperator {
 public:
  static constexpr double kPruneTolerance = 1e-14;

  explicit PauliOperator(int n);

  static PauliOperator from_terms(
      int n, std::initializer_list<std::pair<std::string_view, double>> terms);

  int qubit_count() const { return n_; }
  const std::map<PauliString, double>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  double coefficient(const PauliString& s) const;

  /// Accumulates into the coefficient of `s`; prunes if the result is tiny.
  PauliOperator& add(const PauliString& s, double value);

  friend bool operator==(const PauliOperator& a, const PauliOperator& b) = default;

 private:
  int n_;
  std::map<PauliString, double> terms_;
};

/// Sum of |coefficient| over all stored terms: a basis-stable upper bound on
/// the spectral norm, used as the norm in the flow stopping criterion.
double coefficient_norm(const PauliOperator& op);

/// True when every term has an even number of Y factors, i.e. the dense
/// matrix is real in the computational basis.
bool real_representable(const PauliOperator& op);

constexpr int kDefaultMaxDenseQubits = 14;
constexpr int kDefaultMaxProjectQubits = 8;

/// Dense matrix with the convention sigma_Z = diag(+1, -1),
/// sigma_X = offdiag(1, 1), sigma_Y = offdiag(-i, i).
DenseOperator to_dense(const PauliOperator& op, int max_qubits = kDefaultMaxDenseQubits);

/// Real dense form; requires real_representable(op).
Eigen::MatrixXd to_dense_real(const PauliOperator& op,
                              int max_qubits = kDefaultMaxDenseQubits);

/// Hilbert-Schmidt projection onto the Pauli basis,
/// coefficient(s) = 2^-n tr(a P_s). Rejects non-Hermitian input
/// (max |a - a^dagger| entry above `hermitian_tol`). Enumerates all 4^n
/// strings, so it is capped at small qubit counts.
PauliOperator from_dense(const DenseOperator& a, double hermitian_tol = 1e-12,
                         int max_qubits = kDefaultMaxProjectQubits);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;  // byte offset into the input text
};

/// Parses the textual notation "0.5*XXI + 0.25*ZZI - 1e-2*IIZ".
/// Terms are coefficient '*' axis letters, joined by '+' or '-';
/// whitespace is ignored. All strings must have equal length.
PauliOperator parse_pauli_operator(std::string_view text);

/// Canonical text form (12 significant digits, terms in string order).
std::string format_pauli_operator(const PauliOperator& op);

}  // namespace bathflow
