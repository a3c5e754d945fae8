#ifndef SKEWINFO_OBSERVABLE_BOUNDS_HPP
#define SKEWINFO_OBSERVABLE_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewinfo/skew.hpp"

namespace skewinfo {

/// Sum of skew informations of a family of observables together with every
/// applicable lower bound and the slack (sum - bound) of each.
struct ObservableBoundReport {
  int n = 0;
  double sum_skew = 0.0;
  std::optional<double> lb0;     // pairwise-sum bound, defined for n > 2
  std::optional<double> lb0_two; // max{I(M1+M2), I(M1-M2)}/2, defined for n == 2
  double lb0bar = 0.0;           // Gram-eigenvalue bound
  double lb1 = 0.0;              // difference-based bound
  /// (name, sum_skew - bound) for each defined bound, in fixed order
  /// lb0, lb0_two, lb0bar, lb1.
  std::vector<std::pair<std::string, double>> slacks;
};

/// sum_i I_rho(M_i). Throws EmptyList, DimMismatch.
double sum_skew(const DensityState& rho, const std::vector<Observable>& obs);

/// Pairwise-sum lower bound for n > 2:
///   [ sum_{i<j} I(M_i+M_j) - (sum_{i<j} sqrt(I(M_i+M_j)))^2/(n-1)^2 ] / (n-2).
/// Throws RequiresAtLeastThree for n <= 2.
double lb_pairwise(const DensityState& rho, const std::vector<Observable>& obs);

/// Gram-eigenvalue lower bound: I_rho(sum_i M_i) / lambda_max(G), where G is
/// the Gram matrix g_ij = Tr(X_i X_j) of the normalized commutators
/// X_i = i[sqrt(rho), M_i] / ||[sqrt(rho), M_i]||.
///
/// Indices whose commutator norm is <= psd_tol have no defined direction.
/// Each such index is charged its worst case: lambda_max over all unit-vector
/// completions, which equals lambda_max of the retained Gram matrix plus the
/// number of undefined indices (appending one unit column raises the Gram
/// operator norm by at most 1). This keeps the bound valid and total, and it
/// agrees with the continuous limit of the generic formula. Returns 0 when
/// every commutator vanishes.
double lb_gram(const DensityState& rho, const std::vector<Observable>& obs,
               const Tolerances& tol = {});

/// Difference-based lower bound for n >= 2:
///   I(sum_i M_i)/n + (2/(n^2(n-1))) (sum_{i<j} sqrt(I(M_i-M_j)))^2.
/// Saturates the sum exactly at n = 2. Throws RequiresAtLeastTwo.
double lb_tight(const DensityState& rho, const std::vector<Observable>& obs);

/// Returns (I(M1)+I(M2), [I(M1+M2)+I(M1-M2)]/2). The two values agree
/// identically; callers assert |lhs - rhs| <= eq_tol.
std::pair<double, double> two_observable_identity(const DensityState& rho,
                                                  const Observable& M1,
                                                  const Observable& M2);

/// Full report for n >= 2 observables. lb0 is present only for n > 2;
/// lb0_two only for n == 2.
ObservableBoundReport report(const DensityState& rho,
                             const std::vector<Observable>& obs,
                             const Tolerances& tol = {});

/// True iff every defined bound b satisfies -eq_tol <= b <= sum_skew + eq_tol.
bool validity_ok(const ObservableBoundReport& rep, double eq_tol);

} // namespace skewinfo

#endif
