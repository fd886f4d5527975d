#include "elasto/linalg.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "elasto/error.hpp"

namespace elasto {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& A) {
  const auto n = static_cast<Eigen::Index>(A.size());
  Eigen::MatrixXcd M(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(A[i].size()) != n)
      throw Error(Errc::InvalidArgument, "matrix is not square");
    for (Eigen::Index j = 0; j < n; ++j) M(i, j) = A[i][j];
  }
  return M;
}

// b - A x accumulated in long double
Eigen::VectorXcd residual_ext(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& x,
                              const Eigen::VectorXcd& b) {
  using lc = std::complex<long double>;
  Eigen::VectorXcd r(b.size());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    lc acc(b(i).real(), b(i).imag());
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      acc -= lc(A(i, j).real(), A(i, j).imag()) * lc(x(j).real(), x(j).imag());
    r(i) = cplx(double(acc.real()), double(acc.imag()));
  }
  return r;
}

}  // namespace

DenseSolve solve_dense(const CMatrix& A, const std::vector<cplx>& b) {
  Eigen::MatrixXcd M = to_eigen(A);
  const auto n = M.rows();
  if (static_cast<Eigen::Index>(b.size()) != n)
    throw Error(Errc::InvalidArgument, "rhs length mismatch");
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = b[i];

  // row equilibration keeps pivots meaningful when rows differ by many decades
  Eigen::VectorXd s(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s(i) = M.row(i).cwiseAbs().maxCoeff();
    if (!(s(i) > 0.0)) throw Error(Errc::SingularSystem, "zero row in system matrix");
    if (!std::isfinite(s(i))) throw Error(Errc::NonFiniteInput, "non-finite system matrix");
  }
  Eigen::MatrixXcd Ms = s.cwiseInverse().asDiagonal() * M;
  Eigen::VectorXcd rs = s.cwiseInverse().asDiagonal() * rhs;

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(Ms);
  const Eigen::MatrixXcd& U = lu.matrixLU();
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(U(i, i)) < 1e-300) throw Error(Errc::SingularSystem, "pivot below 1e-300");

  Eigen::VectorXcd x = lu.solve(rs);
  // two steps of refinement with an extended-precision residual
  for (int it = 0; it < 2; ++it) x += lu.solve(residual_ext(Ms, x, rs));
  DenseSolve out;
  out.x.assign(x.data(), x.data() + n);
  const double nb = rhs.norm();
  const double nr = residual_ext(M, x, rhs).norm();
  out.residual = nb > 0.0 ? nr / nb : nr;
  out.rcond = lu.rcond();
  return out;
}

cplx determinant(const CMatrix& A) { return to_eigen(A).partialPivLu().determinant(); }

}  // namespace elasto
