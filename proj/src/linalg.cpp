#include "skewinfo/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace skewinfo {

void Tolerances::validate() const {
  const double all[] = {herm_tol, psd_tol, trace_tol, eq_tol, complete_tol};
  for (double v : all) {
    if (!(v > 0.0)) {
      throw DomainError("tolerances must be strictly positive");
    }
  }
}

void check_square_finite(const ComplexMatrix& A) {
  if (A.rows() == 0 || A.rows() != A.cols()) {
    throw InvalidMatrix("matrix must be square and non-empty");
  }
  if (!A.allFinite()) {
    throw InvalidMatrix("matrix contains NaN or Inf entries");
  }
}

bool is_hermitian(const ComplexMatrix& A, double herm_tol) {
  const double scale = std::max(1.0, A.norm());
  return (A - A.adjoint()).norm() <= herm_tol * scale;
}

HermitianEig hermitian_eig(const ComplexMatrix& A, const Tolerances& tol) {
  tol.validate();
  check_square_finite(A);
  if (!is_hermitian(A, tol.herm_tol)) {
    throw NotHermitian("hermitian_eig: input is not Hermitian within tolerance");
  }
  const ComplexMatrix sym = 0.5 * (A + A.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& A, const Tolerances& tol) {
  HermitianEig eig = hermitian_eig(A, tol);
  Eigen::VectorXd lambda = eig.eigenvalues;
  if (lambda.minCoeff() < -tol.psd_tol) {
    throw NotPositiveSemidefinite("matrix_sqrt_psd: eigenvalue below -psd_tol");
  }
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    lambda(i) = std::abs(lambda(i)) <= tol.psd_tol ? 0.0 : std::sqrt(lambda(i));
  }
  ComplexMatrix root =
      eig.eigenvectors * lambda.asDiagonal() * eig.eigenvectors.adjoint();
  // re-Hermitize to strip the adjoint-product roundoff
  return 0.5 * (root + root.adjoint());
}

ComplexMatrix commutator(const ComplexMatrix& A, const ComplexMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw DimMismatch("commutator: operand dimensions differ");
  }
  return A * B - B * A;
}

double frobenius_norm(const ComplexMatrix& A) { return A.norm(); }

} // namespace skewinfo
