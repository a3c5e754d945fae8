#include "skewinfo/observable_bounds.hpp"

#include <cmath>

namespace skewinfo {

namespace {

void check_family(const DensityState& rho, const std::vector<Observable>& obs) {
  if (obs.empty()) {
    throw EmptyList("observable list is empty");
  }
  for (const Observable& M : obs) {
    if (M.dim() != rho.dim()) {
      throw DimMismatch("observable dimension differs from the state");
    }
  }
}

ComplexMatrix family_sum(const std::vector<Observable>& obs) {
  ComplexMatrix total = obs.front().matrix();
  for (std::size_t i = 1; i < obs.size(); ++i) {
    total += obs[i].matrix();
  }
  return total;
}

} // namespace

double sum_skew(const DensityState& rho, const std::vector<Observable>& obs) {
  check_family(rho, obs);
  double total = 0.0;
  for (const Observable& M : obs) {
    total += skew_operator(rho, M.matrix());
  }
  return total;
}

double lb_pairwise(const DensityState& rho, const std::vector<Observable>& obs) {
  check_family(rho, obs);
  const std::size_t n = obs.size();
  if (n <= 2) {
    throw RequiresAtLeastThree("lb_pairwise is defined for n > 2 observables");
  }
  double pair_sum = 0.0;
  double root_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = skew_operator(rho, obs[i].matrix() + obs[j].matrix());
      pair_sum += v;
      root_sum += std::sqrt(v);
    }
  }
  const double nm1 = static_cast<double>(n - 1);
  return (pair_sum - root_sum * root_sum / (nm1 * nm1)) / static_cast<double>(n - 2);
}

double lb_gram(const DensityState& rho, const std::vector<Observable>& obs,
               const Tolerances& tol) {
  check_family(rho, obs);
  std::vector<ComplexMatrix> directions; // normalized i[sqrt(rho), M_i]
  std::size_t dropped = 0;
  for (const Observable& M : obs) {
    ComplexMatrix C = commutator(rho.sqrt(), M.matrix());
    const double nrm = C.norm();
    if (nrm > tol.psd_tol) {
      directions.push_back(std::complex<double>(0.0, 1.0) / nrm * C);
    } else {
      ++dropped;
    }
  }
  if (directions.empty()) {
    return 0.0;
  }
  const std::size_t k = directions.size();
  // Gram matrix of Hermitian unit directions; entries are real.
  ComplexMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (directions[i] * directions[j]).trace().real();
    }
  }
  const HermitianEig eig = hermitian_eig(gram, tol);
  // Undefined directions are charged their worst-case completion: one unit
  // column can raise lambda_max by at most 1.
  const double lambda_max =
      eig.eigenvalues(eig.eigenvalues.size() - 1) + static_cast<double>(dropped);
  if (lambda_max < tol.psd_tol) {
    return 0.0;
  }
  return skew_operator(rho, family_sum(obs)) / lambda_max;
}

double lb_tight(const DensityState& rho, const std::vector<Observable>& obs) {
  check_family(rho, obs);
  const std::size_t n = obs.size();
  if (n < 2) {
    throw RequiresAtLeastTwo("lb_tight is defined for n >= 2 observables");
  }
  double root_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      root_sum += std::sqrt(skew_operator(rho, obs[i].matrix() - obs[j].matrix()));
    }
  }
  const double dn = static_cast<double>(n);
  return skew_operator(rho, family_sum(obs)) / dn +
         2.0 / (dn * dn * (dn - 1.0)) * root_sum * root_sum;
}

std::pair<double, double> two_observable_identity(const DensityState& rho,
                                                  const Observable& M1,
                                                  const Observable& M2) {
  if (M1.dim() != rho.dim() || M2.dim() != rho.dim()) {
    throw DimMismatch("two_observable_identity: dimensions differ");
  }
  const double lhs = skew_operator(rho, M1.matrix()) + skew_operator(rho, M2.matrix());
  const double rhs = 0.5 * (skew_operator(rho, M1.matrix() + M2.matrix()) +
                            skew_operator(rho, M1.matrix() - M2.matrix()));
  return {lhs, rhs};
}

ObservableBoundReport report(const DensityState& rho, const std::vector<Observable>& obs,
                             const Tolerances& tol) {
  check_family(rho, obs);
  if (obs.size() < 2) {
    throw RequiresAtLeastTwo("report requires n >= 2 observables");
  }
  ObservableBoundReport rep;
  rep.n = static_cast<int>(obs.size());
  rep.sum_skew = sum_skew(rho, obs);
  rep.lb0bar = lb_gram(rho, obs, tol);
  rep.lb1 = lb_tight(rho, obs);
  if (obs.size() > 2) {
    rep.lb0 = lb_pairwise(rho, obs);
    rep.slacks.emplace_back("lb0", rep.sum_skew - *rep.lb0);
  } else {
    rep.lb0_two = 0.5 * std::max(skew_operator(rho, obs[0].matrix() + obs[1].matrix()),
                                 skew_operator(rho, obs[0].matrix() - obs[1].matrix()));
    rep.slacks.emplace_back("lb0_two", rep.sum_skew - *rep.lb0_two);
  }
  rep.slacks.emplace_back("lb0bar", rep.sum_skew - rep.lb0bar);
  rep.slacks.emplace_back("lb1", rep.sum_skew - rep.lb1);
  return rep;
}

bool validity_ok(const ObservableBoundReport& rep, double eq_tol) {
  const auto ok = [&](double bound) {
    return bound >= -eq_tol && bound <= rep.sum_skew + eq_tol;
  };
  if (rep.lb0 && !ok(*rep.lb0)) return false;
  if (rep.lb0_two && !ok(*rep.lb0_two)) return false;
  return ok(rep.lb0bar) && ok(rep.lb1);
}

} // namespace skewinfo
