#include "skewinfo/skew.hpp"

#include <cmath>
#include <utility>

namespace skewinfo {

namespace {

// I(K) = (1/2) ||[sqrt_rho, K]||_F^2. Shared by all three entry points so
// Hermitian and non-Hermitian inputs run the identical code path.
double skew_raw(const ComplexMatrix& sqrt_rho, const ComplexMatrix& K) {
  const double nrm = (sqrt_rho * K - K * sqrt_rho).norm();
  double value = 0.5 * nrm * nrm;
  if (value < 0.0 && value >= -1e-12) {
    value = 0.0; // squared norm; tiny negatives are roundoff
  }
  return value;
}

} // namespace

DensityState::DensityState(ComplexMatrix rho, const Tolerances& tol)
    : matrix_(std::move(rho)) {
  tol.validate();
  check_square_finite(matrix_);
  if (!is_hermitian(matrix_, tol.herm_tol)) {
    throw NotHermitian("DensityState: matrix is not Hermitian within tolerance");
  }
  if (std::abs(matrix_.trace() - std::complex<double>(1.0, 0.0)) > tol.trace_tol) {
    throw InvalidTrace("DensityState: trace deviates from 1 beyond trace_tol");
  }
  HermitianEig eig = hermitian_eig(matrix_, tol);
  if (eig.eigenvalues.minCoeff() < -tol.psd_tol) {
    throw NotPositiveSemidefinite("DensityState: eigenvalue below -psd_tol");
  }
  eigenvalues_ = eig.eigenvalues;
  Eigen::VectorXd root(eigenvalues_.size());
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    if (std::abs(eigenvalues_(i)) <= tol.psd_tol) {
      eigenvalues_(i) = 0.0;
    }
    root(i) = std::sqrt(eigenvalues_(i));
  }
  sqrt_ = eig.eigenvectors * root.asDiagonal() * eig.eigenvectors.adjoint();
  sqrt_ = 0.5 * (sqrt_ + sqrt_.adjoint());
}

Observable::Observable(ComplexMatrix m, const Tolerances& tol) : matrix_(std::move(m)) {
  tol.validate();
  check_square_finite(matrix_);
  if (!is_hermitian(matrix_, tol.herm_tol)) {
    throw NotHermitian("Observable: matrix is not Hermitian within tolerance");
  }
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, const Tolerances& tol)
    : kraus_(std::move(kraus)) {
  tol.validate();
  if (kraus_.empty()) {
    throw EmptyList("KrausChannel: at least one Kraus element is required");
  }
  const Eigen::Index d = kraus_.front().rows();
  for (const ComplexMatrix& K : kraus_) {
    check_square_finite(K);
    if (K.rows() != d) {
      throw DimMismatch("KrausChannel: Kraus elements have mixed dimensions");
    }
  }
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& K : kraus_) {
    sum += K.adjoint() * K;
  }
  if ((sum - ComplexMatrix::Identity(d, d)).norm() > tol.complete_tol) {
    throw KrausIncomplete("KrausChannel: sum K^dag K deviates from identity");
  }
}

double skew_observable(const DensityState& rho, const Observable& M) {
  if (rho.dim() != M.dim()) {
    throw DimMismatch("skew_observable: state and observable dimensions differ");
  }
  return skew_raw(rho.sqrt(), M.matrix());
}

double skew_operator(const DensityState& rho, const ComplexMatrix& K) {
  check_square_finite(K);
  if (rho.dim() != K.rows()) {
    throw DimMismatch("skew_operator: state and operator dimensions differ");
  }
  return skew_raw(rho.sqrt(), K);
}

double skew_channel(const DensityState& rho, const KrausChannel& E) {
  if (rho.dim() != E.dim()) {
    throw DimMismatch("skew_channel: state and channel dimensions differ");
  }
  double total = 0.0;
  for (const ComplexMatrix& K : E.kraus()) {
    total += skew_raw(rho.sqrt(), K);
  }
  return total;
}

} // namespace skewinfo
