#include "bathflow/eig.hpp"

#include <lapacke.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bathflow::eig {

namespace {

void check_info(lapack_int info, const char* routine) {
  if (info != 0)
    throw std::runtime_error(std::string(routine) + " failed with info=" + std::to_string(info));
}

lapack_int dim_of(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols || rows < 1) throw std::invalid_argument("eig: matrix must be square");
  return static_cast<lapack_int>(rows);
}

}  // namespace

bool nearly_real(const Eigen::MatrixXcd& a, double tol) {
  const double max_imag = a.imag().cwiseAbs().maxCoeff();
  const double max_real = a.real().cwiseAbs().maxCoeff();
  return max_imag <= tol * (1.0 + max_real);
}

Eigen::VectorXd eigenvalues(Eigen::MatrixXd a) {
  const lapack_int n = dim_of(a.rows(), a.cols());
  Eigen::VectorXd w(n);
  lapack_int m = 0;
  std::vector<lapack_int> isuppz(static_cast<std::size_t>(2 * n));
  lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', 'A', 'L', n, a.data(), n, 0, 0, 0, 0,
                                   0.0, &m, w.data(), nullptr, n, isuppz.data());
  check_info(info, "dsyevr");
  return w;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& a) {
  if (nearly_real(a)) return eigenvalues(Eigen::MatrixXd(a.real()));
  Eigen::MatrixXcd work = a;
  const lapack_int n = dim_of(work.rows(), work.cols());
  Eigen::VectorXd w(n);
  lapack_int m = 0;
  std::vector<lapack_int> isuppz(static_cast<std::size_t>(2 * n));
  lapack_int info = LAPACKE_zheevr(LAPACK_COL_MAJOR, 'N', 'A', 'L', n,
                                   reinterpret_cast<lapack_complex_double*>(work.data()), n, 0, 0,
                                   0, 0, 0.0, &m, w.data(), nullptr, n, isuppz.data());
  check_info(info, "zheevr");
  return w;
}

LowestPair lowest_two(Eigen::MatrixXd a) {
  const lapack_int n = dim_of(a.rows(), a.cols());
  if (n < 2) throw std::invalid_argument("eig::lowest_two: dimension must be >= 2");
  Eigen::VectorXd w(n);
  Eigen::MatrixXd z(n, 2);
  lapack_int m = 0;
  std::vector<lapack_int> isuppz(4);
  lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0, 0, 1, 2,
                                   0.0, &m, w.data(), z.data(), n, isuppz.data());
  check_info(info, "dsyevr");
  if (m < 2) throw std::runtime_error("dsyevr returned fewer than two eigenpairs");
  LowestPair out;
  out.e0 = w(0);
  out.e1 = w(1);
  out.ground = z.col(0).cast<std::complex<double>>();
  return out;
}

LowestPair lowest_two(const Eigen::MatrixXcd& a) {
  if (nearly_real(a)) return lowest_two(Eigen::MatrixXd(a.real()));
  Eigen::MatrixXcd work = a;
  const lapack_int n = dim_of(work.rows(), work.cols());
  if (n < 2) throw std::invalid_argument("eig::lowest_two: dimension must be >= 2");
  Eigen::VectorXd w(n);
  Eigen::MatrixXcd z(n, 2);
  lapack_int m = 0;
  std::vector<lapack_int> isuppz(4);
  lapack_int info = LAPACKE_zheevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n,
                                   reinterpret_cast<lapack_complex_double*>(work.data()), n, 0, 0,
                                   1, 2, 0.0, &m, w.data(),
                                   reinterpret_cast<lapack_complex_double*>(z.data()), n,
                                   isuppz.data());
  check_info(info, "zheevr");
  if (m < 2) throw std::runtime_error("zheevr returned fewer than two eigenpairs");
  LowestPair out;
  out.e0 = w(0);
  out.e1 = w(1);
  out.ground = z.col(0);
  return out;
}

}  // namespace bathflow::eig
