#ifndef SKEWINFO_SKEW_HPP
#define SKEWINFO_SKEW_HPP

#include <vector>

#include "skewinfo/linalg.hpp"

namespace skewinfo {

/// A validated density matrix with its principal square root cached.
///
/// Construction checks Hermiticity, positivity (eigenvalues >= -psd_tol) and
/// unit trace, then stores the clamped ascending spectrum and sqrt(rho).
/// Instances are immutable; sharing across threads is safe.
class DensityState {
public:
  explicit DensityState(ComplexMatrix rho, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return matrix_; }
  const ComplexMatrix& sqrt() const { return sqrt_; }
  /// Ascending eigenvalues with |lambda| <= psd_tol clamped to zero.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  Eigen::Index dim() const { return matrix_.rows(); }

private:
  ComplexMatrix matrix_;
  ComplexMatrix sqrt_;
  Eigen::VectorXd eigenvalues_;
};

/// A validated Hermitian observable.
class Observable {
public:
  explicit Observable(ComplexMatrix m, const Tolerances& tol = {});

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

private:
  ComplexMatrix matrix_;
};

/// An ordered Kraus representation of a quantum channel.
///
/// Elements need not be Hermitian; the completeness relation
/// sum_i K_i^dag K_i = I must hold within complete_tol. All skew-information
/// values computed from a channel refer to the representation as given
/// (they are not invariant under the Kraus unitary freedom).
class KrausChannel {
public:
  explicit KrausChannel(std::vector<ComplexMatrix> kraus, const Tolerances& tol = {});

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& operator[](std::size_t i) const { return kraus_[i]; }
  std::size_t size() const { return kraus_.size(); }
  Eigen::Index dim() const { return kraus_.front().rows(); }

private:
  std::vector<ComplexMatrix> kraus_;
};

/// Skew information of a Hermitian observable:
/// I_rho(M) = (1/2) ||[sqrt(rho), M]||_F^2. Always >= 0.
double skew_observable(const DensityState& rho, const Observable& M);

/// Skew information of an arbitrary (not necessarily Hermitian) operator:
/// I_rho(K) = (1/2) ||[sqrt(rho), K]||_F^2. Coincides with skew_observable
/// for Hermitian K, computed through the identical code path.
double skew_operator(const DensityState& rho, const ComplexMatrix& K);

/// Skew information of a channel: the sum of skew_operator over its Kraus
/// elements.
double skew_channel(const DensityState& rho, const KrausChannel& E);

} // namespace skewinfo

#endif
