#include "bathflow/pauli.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>

namespace bathflow {

using std::complex;

char axis_char(PauliAxis a) {
  switch (a) {
    case PauliAxis::I: return 'I';
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  throw std::logic_error("invalid PauliAxis");
}

PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return PauliAxis::I;
    case 'X': case 'x': return PauliAxis::X;
    case 'Y': case 'y': return PauliAxis::Y;
    case 'Z': case 'z': return PauliAxis::Z;
  }
  throw std::invalid_argument(std::string("invalid Pauli axis letter '") + c + "'");
}

PauliString::PauliString(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("PauliString: qubit count must be in [1, 64]");
}

PauliString::PauliString(std::initializer_list<PauliAxis> axes)
    : PauliString(static_cast<int>(axes.size())) {
  int i = 0;
  for (PauliAxis a : axes) {
    *this = with_axis(i, a);
    ++i;
  }
}

PauliString::PauliString(std::string_view letters)
    : PauliString(static_cast<int>(letters.size())) {
  for (int i = 0; i < n_; ++i) *this = with_axis(i, axis_from_char(letters[i]));
}

PauliString PauliString::single(int n, int qubit, PauliAxis a) {
  return PauliString(n).with_axis(qubit, a);
}

void PauliString::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_) throw std::out_of_range("PauliString: qubit index out of range");
}

PauliAxis PauliString::axis(int qubit) const {
  check_qubit(qubit);
  const bool x = (x_ >> qubit) & 1u;
  const bool z = (z_ >> qubit) & 1u;
  if (x && z) return PauliAxis::Y;
  if (x) return PauliAxis::X;
  if (z) return PauliAxis::Z;
  return PauliAxis::I;
}

PauliString PauliString::with_axis(int qubit, PauliAxis a) const {
  check_qubit(qubit);
  PauliString out = *this;
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  out.x_ &= ~bit;
  out.z_ &= ~bit;
  if (a == PauliAxis::X || a == PauliAxis::Y) out.x_ |= bit;
  if (a == PauliAxis::Y || a == PauliAxis::Z) out.z_ |= bit;
  return out;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

int PauliString::y_count() const { return std::popcount(x_ & z_); }

std::string PauliString::str() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = axis_char(axis(i));
  return out;
}

std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (int i = 0; i < a.n_; ++i) {
    auto cmp = static_cast<int>(a.axis(i)) <=> static_cast<int>(b.axis(i));
    if (cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

std::vector<int> anticommuting_support(const PauliString& s) {
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if ((s.x_bits() >> i) & 1u) out.push_back(i);
  return out;
}

PauliOperator::PauliOperator(int n) : n_(n) {
  if (n < 1 || n > PauliString::kMaxQubits)
    throw std::invalid_argument("PauliOperator: qubit count must be in [1, 64]");
}

PauliOperator PauliOperator::from_terms(
    int n, std::initializer_list<std::pair<std::string_view, double>> terms) {
  PauliOperator op(n);
  for (const auto& [letters, value] : terms) op.add(PauliString(letters), value);
  return op;
}

double PauliOperator::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0.0 : it->second;
}

PauliOperator& PauliOperator::add(const PauliString& s, double value) {
  if (s.size() != n_)
    throw std::invalid_argument("PauliOperator::add: string length does not match qubit count");
  auto [it, inserted] = terms_.try_emplace(s, 0.0);
  it->second += value;
  if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
  return *this;
}

double coefficient_norm(const PauliOperator& op) {
  double sum = 0.0;
  for (const auto& [s, v] : op.terms()) sum += std::abs(v);
  return sum;
}

bool real_representable(const PauliOperator& op) {
  for (const auto& [s, v] : op.terms())
    if (s.y_count() % 2 != 0) return false;
  return true;
}

namespace {

// Bit i of `mask` refers to qubit i; computational-basis indices carry qubit 0
// in the most significant of n bits.
std::uint64_t qubit_mask_to_index_mask(std::uint64_t mask, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) out |= std::uint64_t{1} << (n - 1 - i);
  return out;
}

void check_dense_size(int n, int max_qubits, const char* what) {
  if (n > max_qubits)
    throw std::invalid_argument(std::string(what) + ": dimension overflow, " +
                                std::to_string(n) + " qubits exceeds the limit of " +
                                std::to_string(max_qubits));
}

complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Adds coef * P_s to a dense matrix. P_s has one nonzero per column:
// row = col ^ xmask, value = i^(#Y) * (-1)^popcount(col & zmask).
template <typename Scalar, typename AddEntry>
void scatter_term(const PauliString& s, int n, AddEntry&& add) {
  const std::uint64_t xm = qubit_mask_to_index_mask(s.x_bits(), n);
  const std::uint64_t zm = qubit_mask_to_index_mask(s.z_bits(), n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t col = 0; col < dim; ++col) {
    const double sign = (std::popcount(col & zm) % 2 == 0) ? 1.0 : -1.0;
    add(col ^ xm, col, sign);
  }
}

}  // namespace

DenseOperator to_dense(const PauliOperator& op, int max_qubits) {
  const int n = op.qubit_count();
  check_dense_size(n, max_qubits, "to_dense");
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const auto& [s, v] : op.terms()) {
    const complex<double> factor = v * i_power(s.y_count());
    scatter_term<complex<double>>(s, n, [&](std::uint64_t r, std::uint64_t c, double sign) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += factor * sign;
    });
  }
  return out;
}

Eigen::MatrixXd to_dense_real(const PauliOperator& op, int max_qubits) {
  const int n = op.qubit_count();
  check_dense_size(n, max_qubits, "to_dense_real");
  if (!real_representable(op))
    throw std::invalid_argument("to_dense_real: operator has terms with odd Y count");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [s, v] : op.terms()) {
    const double factor = v * i_power(s.y_count()).real();  // +-1 for even Y count
    scatter_term<double>(s, n, [&](std::uint64_t r, std::uint64_t c, double sign) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += factor * sign;
    });
  }
  return out;
}

PauliOperator from_dense(const DenseOperator& a, double hermitian_tol, int max_qubits) {
  const Eigen::Index dim = a.rows();
  if (dim < 2 || a.cols() != dim || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("from_dense: matrix dimension must be a power of two >= 2");
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  check_dense_size(n, max_qubits, "from_dense");

  const double herm_dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > hermitian_tol)
    throw std::invalid_argument("from_dense: input is not Hermitian within tolerance, max deviation " +
                                std::to_string(herm_dev));

  PauliOperator op(n);
  const double scale = 1.0 / static_cast<double>(dim);
  // Enumerate all 4^n strings via base-4 counter.
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    PauliString str(n);
    for (int i = 0; i < n; ++i) {
      str = str.with_axis(i, static_cast<PauliAxis>(c & 3u));
      c >>= 2;
    }
    // tr(a P) = sum_r a(r, r ^ xm) * P(r ^ xm, r)
    const std::uint64_t xm = qubit_mask_to_index_mask(str.x_bits(), n);
    const std::uint64_t zm = qubit_mask_to_index_mask(str.z_bits(), n);
    complex<double> trace = 0;
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(dim); ++r) {
      const std::uint64_t cidx = r ^ xm;
      const double sign = (std::popcount(r & zm) % 2 == 0) ? 1.0 : -1.0;
      trace += a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx)) *
               (i_power(str.y_count()) * sign);
    }
    const double value = (trace * scale).real();
    if (std::abs(value) >= PauliOperator::kPruneTolerance) op.add(str, value);
  }
  return op;
}

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }
};

double parse_number(Cursor& cur) {
  cur.skip_space();
  const char* begin = cur.text.data() + cur.pos;
  const char* end = cur.text.data() + cur.text.size();
  double value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin)
    throw ParseError("expected a numeric coefficient", cur.pos);
  cur.pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

std::string parse_letters(Cursor& cur) {
  cur.skip_space();
  const std::size_t start = cur.pos;
  std::string letters;
  while (cur.pos < cur.text.size()) {
    const char c = cur.text[cur.pos];
    if (c == 'I' || c == 'X' || c == 'Y' || c == 'Z' || c == 'i' || c == 'x' || c == 'y' ||
        c == 'z') {
      letters.push_back(c);
      ++cur.pos;
    } else {
      break;
    }
  }
  if (letters.empty()) throw ParseError("expected Pauli axis letters (I, X, Y, Z)", start);
  return letters;
}

}  // namespace

PauliOperator parse_pauli_operator(std::string_view text) {
  Cursor cur{text};
  if (cur.done()) throw ParseError("empty operator text", 0);

  struct RawTerm {
    double value;
    std::string letters;
    std::size_t pos;
  };
  std::vector<RawTerm> raw;

  double sign = 1.0;
  cur.skip_space();
  if (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
    if (cur.peek() == '-') sign = -1.0;
    ++cur.pos;
  }
  while (true) {
    cur.skip_space();
    const std::size_t term_pos = cur.pos;
    const double value = parse_number(cur);
    cur.skip_space();
    if (cur.done() || cur.peek() != '*') throw ParseError("expected '*' after coefficient", cur.pos);
    ++cur.pos;
    std::string letters = parse_letters(cur);
    raw.push_back({sign * value, std::move(letters), term_pos});
    if (cur.done()) break;
    const char sep = cur.peek();
    if (sep == '+') sign = 1.0;
    else if (sep == '-') sign = -1.0;
    else throw ParseError("expected '+' or '-' between terms", cur.pos);
    ++cur.pos;
  }

  const std::size_t n = raw.front().letters.size();
  for (const RawTerm& t : raw)
    if (t.letters.size() != n)
      throw ParseError("Pauli string length mismatch (expected " + std::to_string(n) + " letters)",
                       t.pos);
  PauliOperator op(static_cast<int>(n));
  for (const RawTerm& t : raw) op.add(PauliString(t.letters), t.value);
  return op;
}

std::string format_pauli_operator(const PauliOperator& op) {
  if (op.empty()) return "0";
  std::string out;
  char buf[64];
  bool first = true;
  for (const auto& [s, v] : op.terms()) {
    const double mag = std::abs(v);
    if (first) {
      if (v < 0) out += "-";
      first = false;
    } else {
      out += v < 0 ? " - " : " + ";
    }
    std::snprintf(buf, sizeof buf, "%.12g", mag);
    out += buf;
    out += "*";
    out += s.str();
  }
  return out;
}

}  // namespace bathflow
