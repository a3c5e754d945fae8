#ifndef SKEWINFO_LINALG_HPP
#define SKEWINFO_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "skewinfo/errors.hpp"

namespace skewinfo {

/// Dense complex matrix. All operators (states, observables, Kraus elements)
/// are carried in this representation before and after validation.
using ComplexMatrix = Eigen::MatrixXcd;

/// Numerical-contract knobs shared by every validator in the library.
struct Tolerances {
  /// Relative Frobenius tolerance for Hermiticity checks.
  double herm_tol = 1e-10;
  /// Eigenvalue floor: |lambda| <= psd_tol is treated as an exact zero,
  /// lambda < -psd_tol is rejected. Also used as the norm floor when
  /// normalizing commutators.
  double psd_tol = 1e-10;
  /// Absolute tolerance on |Tr(rho) - 1|.
  double trace_tol = 1e-10;
  /// Absolute tolerance when asserting equalities between bound expressions.
  double eq_tol = 1e-9;
  /// Absolute Frobenius tolerance for the Kraus completeness relation.
  double complete_tol = 1e-9;

  /// Throws DomainError unless every tolerance is strictly positive.
  void validate() const;
};

struct HermitianEig {
  Eigen::VectorXd eigenvalues; // ascending
  ComplexMatrix eigenvectors;  // unitary, columns match eigenvalues
};

/// Throws InvalidMatrix unless A is square with all entries finite.
void check_square_finite(const ComplexMatrix& A);

/// ||A - A^dag||_F <= herm_tol * max(1, ||A||_F).
bool is_hermitian(const ComplexMatrix& A, double herm_tol);

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
///
/// The input is symmetrized as (A + A^dag)/2 before solving, so the
/// reconstruction V diag(lambda) V^dag matches A up to the Hermiticity
/// tolerance plus solver error.
///
/// Throws NotHermitian if the precondition fails, ConvergenceFailure if the
/// solver does not converge.
HermitianEig hermitian_eig(const ComplexMatrix& A, const Tolerances& tol = {});

/// Principal square root of a Hermitian PSD matrix.
///
/// Eigenvalues with |lambda| <= psd_tol are clamped to exactly zero before
/// taking square roots; rank-deficient inputs (pure states) therefore do not
/// pick up O(sqrt(eps)) noise directions. Eigenvalues below -psd_tol throw
/// NotPositiveSemidefinite.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& A, const Tolerances& tol = {});

/// AB - BA. Throws DimMismatch.
ComplexMatrix commutator(const ComplexMatrix& A, const ComplexMatrix& B);

/// sqrt(sum |a_ij|^2) = sqrt(Tr(A^dag A)).
double frobenius_norm(const ComplexMatrix& A);

} // namespace skewinfo

#endif
