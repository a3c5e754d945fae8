#ifndef SKEWINFO_ERRORS_HPP
#define SKEWINFO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewinfo {

/// Base class for every error thrown by this library.
class SkewError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input matrix is not square or contains NaN/Inf entries.
class InvalidMatrix : public SkewError {
public:
  using SkewError::SkewError;
};

/// Hermiticity precondition failed: ||A - A^dag||_F > herm_tol * max(1, ||A||_F).
class NotHermitian : public SkewError {
public:
  using SkewError::SkewError;
};

/// Smallest eigenvalue is below -psd_tol.
class NotPositiveSemidefinite : public SkewError {
public:
  using SkewError::SkewError;
};

/// |Tr(rho) - 1| exceeds trace_tol.
class InvalidTrace : public SkewError {
public:
  using SkewError::SkewError;
};

/// The eigensolver did not converge.
class ConvergenceFailure : public SkewError {
public:
  using SkewError::SkewError;
};

/// Operands have incompatible dimensions (or Kraus lists of unequal length
/// where equal counts are required).
class DimMismatch : public SkewError {
public:
  using SkewError::SkewError;
};

/// An operation received an empty list.
class EmptyList : public SkewError {
public:
  using SkewError::SkewError;
};

class RequiresAtLeastTwo : public SkewError {
public:
  using SkewError::SkewError;
};

class RequiresAtLeastThree : public SkewError {
public:
  using SkewError::SkewError;
};

/// Exhaustive permutation search would exceed the configured cap.
class SearchSpaceTooLarge : public SkewError {
public:
  using SkewError::SkewError;
};

/// A permutation is not a bijection on {0,...,n-1} or has the wrong length.
class BadPermutation : public SkewError {
public:
  using SkewError::SkewError;
};

/// Kraus completeness sum deviates from the identity beyond complete_tol.
class KrausIncomplete : public SkewError {
public:
  using SkewError::SkewError;
};

/// Bloch vector lies outside the unit ball.
class OutsideBlochBall : public SkewError {
public:
  using SkewError::SkewError;
};

/// Catalog constructor parameters outside their stated domain.
class OutsideParameterDomain : public SkewError {
public:
  using SkewError::SkewError;
};

/// Channel parameter q outside [0, 1].
class ParamOutOfRange : public SkewError {
public:
  using SkewError::SkewError;
};

/// Argument outside the domain of an analytic reference function.
class DomainError : public SkewError {
public:
  using SkewError::SkewError;
};

/// Malformed JSON input or unrecognized CLI object spec.
class ParseError : public SkewError {
public:
  using SkewError::SkewError;
};

} // namespace skewinfo

#endif
