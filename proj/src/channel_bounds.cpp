#include "skewinfo/channel_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace skewinfo {

namespace {

void check_channels(const DensityState& rho, const std::vector<KrausChannel>& channels) {
  for (const KrausChannel& E : channels) {
    if (E.dim() != rho.dim()) {
      throw DimMismatch("channel dimension differs from the state");
    }
  }
}

std::size_t common_kraus_count(const std::vector<KrausChannel>& channels) {
  const std::size_t n = channels.front().size();
  for (const KrausChannel& E : channels) {
    if (E.size() != n) {
      throw DimMismatch("Kraus counts differ; run normalize_kraus_counts first");
    }
  }
  return n;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

// (n!)^power, saturating at the cap sentinel to avoid overflow.
std::uint64_t search_space(std::size_t n, std::size_t power, std::uint64_t cap) {
  const std::uint64_t base = factorial(n);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < power; ++k) {
    if (total > cap / std::max<std::uint64_t>(base, 1)) {
      return cap + 1;
    }
    total *= base;
  }
  return total;
}

// Odometer over (N-1) permutation indices, last index fastest, so tuples are
// visited in lexicographic order.
bool advance(std::vector<std::size_t>& idx, std::size_t radix) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < radix) {
      return true;
    }
    idx[pos] = 0;
  }
  return false;
}

double pair_table_entry(const DensityState& rho, const ComplexMatrix& A,
                        const ComplexMatrix& B, double sign) {
  return skew_operator(rho, A + sign * B);
}

// skew(K^t_a + sign K^s_b) for one channel pair, as an n x n table.
Eigen::MatrixXd pair_table(const DensityState& rho, const KrausChannel& Et,
                           const KrausChannel& Es, double sign) {
  const std::size_t n = Et.size();
  Eigen::MatrixXd table(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          pair_table_entry(rho, Et[a], Es[b], sign);
    }
  }
  return table;
}

} // namespace

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (int v : mapping_) {
    if (v < 0 || static_cast<std::size_t>(v) >= mapping_.size() || seen[v]) {
      throw BadPermutation("mapping is not a bijection on {0,...,n-1}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  std::vector<Permutation> perms;
  do {
    perms.push_back(Permutation(m));
  } while (std::next_permutation(m.begin(), m.end()));
  return perms;
}

std::vector<KrausChannel> normalize_kraus_counts(const std::vector<KrausChannel>& channels,
                                                 const Tolerances& tol) {
  if (channels.empty()) {
    throw EmptyList("normalize_kraus_counts: no channels given");
  }
  const Eigen::Index d = channels.front().dim();
  std::size_t target = 0;
  for (const KrausChannel& E : channels) {
    if (E.dim() != d) {
      throw DimMismatch("normalize_kraus_counts: channels have mixed dimensions");
    }
    target = std::max(target, E.size());
  }
  std::vector<KrausChannel> padded;
  padded.reserve(channels.size());
  for (const KrausChannel& E : channels) {
    std::vector<ComplexMatrix> kraus = E.kraus();
    kraus.resize(target, ComplexMatrix::Zero(d, d));
    padded.push_back(KrausChannel(std::move(kraus), tol));
  }
  return padded;
}

FuTwoChannelResult fu_two_channel(const DensityState& rho, const KrausChannel& E1,
                                  const KrausChannel& E2, const PermSearchOptions& opts) {
  check_channels(rho, {E1, E2});
  const std::size_t n = common_kraus_count({E1, E2});
  const std::uint64_t space = search_space(n, 1, opts.perm_cap);
  if (!opts.identity_only && space > opts.perm_cap) {
    throw SearchSpaceTooLarge("fu_two_channel: n! exceeds perm_cap");
  }

  const Eigen::MatrixXd plus = pair_table(rho, E1, E2, +1.0);
  const Eigen::MatrixXd minus = pair_table(rho, E1, E2, -1.0);
  const std::vector<Permutation> perms =
      opts.identity_only ? std::vector<Permutation>{Permutation::identity(n)}
                         : Permutation::all(n);

  FuTwoChannelResult best{-std::numeric_limits<double>::infinity(),
                          Permutation::identity(n), +1,
                          !opts.identity_only || space == 1};
  for (const Permutation& pi : perms) {
    for (int sign : {+1, -1}) {
      const Eigen::MatrixXd& table = sign > 0 ? plus : minus;
      double value = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        value += table(static_cast<Eigen::Index>(i), pi[i]);
      }
      value *= 0.5;
      if (value > best.bound) {
        best.bound = value;
        best.pi = pi;
        best.sign = sign;
      }
    }
  }
  return best;
}

namespace {

// Shared tuple maximization for the two N-channel bounds. pi_1 is pinned to
// the identity: substituting i -> pi_1^{-1}(i) in the i-sums maps any tuple
// onto one with pi_1 = id and the same objective.
TupleBoundResult maximize_over_tuples(
    const std::vector<KrausChannel>& channels, const PermSearchOptions& opts,
    const std::function<double(const std::vector<const Permutation*>&)>& objective) {
  const std::size_t N = channels.size();
  const std::size_t n = common_kraus_count(channels);
  const std::uint64_t space = search_space(n, N - 1, opts.perm_cap);
  if (!opts.identity_only && space > opts.perm_cap) {
    throw SearchSpaceTooLarge("channel bound: (n!)^(N-1) exceeds perm_cap");
  }

  const std::vector<Permutation> perms =
      opts.identity_only ? std::vector<Permutation>{Permutation::identity(n)}
                         : Permutation::all(n);

  std::vector<std::size_t> idx(N - 1, 0);
  std::vector<const Permutation*> tuple(N, &perms.front());
  const Permutation id = Permutation::identity(n);
  tuple[0] = &id;

  TupleBoundResult best;
  best.bound = -std::numeric_limits<double>::infinity();
  best.exhaustive = !opts.identity_only || space == 1;
  bool more = true;
  while (more) {
    for (std::size_t t = 1; t < N; ++t) {
      tuple[t] = &perms[idx[t - 1]];
    }
    const double value = objective(tuple);
    if (value > best.bound) {
      best.bound = value;
      best.pis.clear();
      for (const Permutation* p : tuple) {
        best.pis.push_back(*p);
      }
    }
    more = advance(idx, perms.size());
  }
  return best;
}

} // namespace

TupleBoundResult thm3_bound(const DensityState& rho,
                            const std::vector<KrausChannel>& channels,
                            const PermSearchOptions& opts) {
  if (channels.size() <= 2) {
    throw RequiresAtLeastThree("thm3_bound is defined for N > 2 channels");
  }
  check_channels(rho, channels);
  const std::size_t N = channels.size();
  const std::size_t n = common_kraus_count(channels);

  // skew(K^t_a + K^s_b) for every pair t < s
  std::vector<std::vector<Eigen::MatrixXd>> sums(N);
  for (std::size_t t = 0; t < N; ++t) {
    sums[t].resize(N);
    for (std::size_t s = t + 1; s < N; ++s) {
      sums[t][s] = pair_table(rho, channels[t], channels[s], +1.0);
    }
  }

  const double scale = 1.0 / static_cast<double>(N - 2);
  const double inv_sq = 1.0 / (static_cast<double>(N - 1) * static_cast<double>(N - 1));
  return maximize_over_tuples(
      channels, opts, [&](const std::vector<const Permutation*>& pis) {
        double pair_sum = 0.0;
        double bracket = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          double roots = 0.0;
          for (std::size_t t = 0; t < N; ++t) {
            for (std::size_t s = t + 1; s < N; ++s) {
              const double v = sums[t][s]((*pis[t])[i], (*pis[s])[i]);
              pair_sum += v;
              roots += std::sqrt(v);
            }
          }
          bracket += roots * roots;
        }
        return scale * (pair_sum - inv_sq * bracket);
      });
}

TupleBoundResult thm4_bound(const DensityState& rho,
                            const std::vector<KrausChannel>& channels,
                            const PermSearchOptions& opts) {
  if (channels.size() < 2) {
    throw RequiresAtLeastTwo("thm4_bound is defined for N >= 2 channels");
  }
  check_channels(rho, channels);
  const std::size_t N = channels.size();
  const std::size_t n = common_kraus_count(channels);
  const Eigen::Index d = rho.dim();

  // skew(K^t_a - K^s_b) for every pair t < s
  std::vector<std::vector<Eigen::MatrixXd>> diffs(N);
  for (std::size_t t = 0; t < N; ++t) {
    diffs[t].resize(N);
    for (std::size_t s = t + 1; s < N; ++s) {
      diffs[t][s] = pair_table(rho, channels[t], channels[s], -1.0);
    }
  }

  const double dN = static_cast<double>(N);
  return maximize_over_tuples(
      channels, opts, [&](const std::vector<const Permutation*>& pis) {
        double sum_term = 0.0;
        double bracket = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          ComplexMatrix stacked = ComplexMatrix::Zero(d, d);
          double roots = 0.0;
          for (std::size_t t = 0; t < N; ++t) {
            stacked += channels[t][static_cast<std::size_t>((*pis[t])[i])];
            for (std::size_t s = t + 1; s < N; ++s) {
              roots += std::sqrt(diffs[t][s]((*pis[t])[i], (*pis[s])[i]));
            }
          }
          sum_term += skew_operator(rho, stacked);
          bracket += roots * roots;
        }
        return sum_term / dN + 2.0 / (dN * dN * (dN - 1.0)) * bracket;
      });
}

std::pair<double, double> two_channel_identity(const DensityState& rho,
                                               const KrausChannel& E1,
                                               const KrausChannel& E2,
                                               const Permutation& pi1,
                                               const Permutation& pi2) {
  check_channels(rho, {E1, E2});
  const std::size_t n = common_kraus_count({E1, E2});
  if (pi1.size() != n || pi2.size() != n) {
    throw BadPermutation("two_channel_identity: permutation size differs from Kraus count");
  }
  const double lhs = skew_channel(rho, E1) + skew_channel(rho, E2);
  double rhs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexMatrix& A = E1[static_cast<std::size_t>(pi1[i])];
    const ComplexMatrix& B = E2[static_cast<std::size_t>(pi2[i])];
    rhs += skew_operator(rho, A + B) + skew_operator(rho, A - B);
  }
  return {lhs, 0.5 * rhs};
}

ChannelBoundReport channel_report(const DensityState& rho,
                                  const std::vector<KrausChannel>& channels,
                                  const PermSearchOptions& opts, const Tolerances& tol) {
  if (channels.size() < 2) {
    throw RequiresAtLeastTwo("channel_report requires N >= 2 channels");
  }
  check_channels(rho, channels);
  const std::vector<KrausChannel> padded = normalize_kraus_counts(channels, tol);

  ChannelBoundReport rep;
  rep.n_channels = static_cast<int>(padded.size());
  rep.n_kraus = static_cast<int>(padded.front().size());
  for (const KrausChannel& E : padded) {
    rep.sum_skew += skew_channel(rho, E);
  }
  rep.thm4 = thm4_bound(rho, padded, opts);
  rep.search_exhaustive = rep.thm4.exhaustive;
  if (padded.size() == 2) {
    rep.fu_two = fu_two_channel(rho, padded[0], padded[1], opts);
    rep.search_exhaustive = rep.search_exhaustive && rep.fu_two->exhaustive;
  } else {
    rep.thm3 = thm3_bound(rho, padded, opts);
    rep.search_exhaustive = rep.search_exhaustive && rep.thm3->exhaustive;
  }
  return rep;
}

bool validity_ok(const ChannelBoundReport& rep, double eq_tol) {
  const auto ok = [&](double bound) {
    return bound >= -eq_tol && bound <= rep.sum_skew + eq_tol;
  };
  if (rep.fu_two && !ok(rep.fu_two->bound)) return false;
  if (rep.thm3 && !ok(rep.thm3->bound)) return false;
  return ok(rep.thm4.bound);
}

} // namespace skewinfo
