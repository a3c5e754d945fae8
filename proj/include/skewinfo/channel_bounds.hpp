#ifndef SKEWINFO_CHANNEL_BOUNDS_HPP
#define SKEWINFO_CHANNEL_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewinfo/skew.hpp"

namespace skewinfo {

/// A bijection on {0, ..., n-1}, used to pair Kraus indices across channels.
class Permutation {
public:
  /// Throws BadPermutation unless mapping is a bijection on {0,...,n-1}.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(std::size_t n);
  /// All n! permutations in lexicographic order.
  static std::vector<Permutation> all(std::size_t n);

  int operator[](std::size_t i) const { return mapping_[i]; }
  std::size_t size() const { return mapping_.size(); }
  const std::vector<int>& mapping() const { return mapping_; }

  bool operator==(const Permutation& other) const = default;

private:
  std::vector<int> mapping_;
};

/// Controls the exhaustive maximization over permutation tuples.
struct PermSearchOptions {
  /// Search proceeds while the candidate count (n!)^(N-1) stays within the
  /// cap. Bigger spaces throw SearchSpaceTooLarge unless identity_only is
  /// set, in which case only the identity tuple is evaluated and results are
  /// flagged non-exhaustive. The bounds stay valid for any permutation
  /// choice; a restricted search only weakens the reported maximum.
  std::uint64_t perm_cap = 1000000;
  bool identity_only = false;
};

struct FuTwoChannelResult {
  double bound = 0.0;
  Permutation pi;
  int sign = +1; // uniform sign applied to every second-channel element
  bool exhaustive = true;
};

struct TupleBoundResult {
  double bound = 0.0;
  std::vector<Permutation> pis; // pis[0] is always the identity
  bool exhaustive = true;
};

/// Channel-bound report: the skew-information sum over N channels with each
/// applicable permutation-maximized lower bound and its argmax.
struct ChannelBoundReport {
  int n_channels = 0; // N
  int n_kraus = 0;    // common Kraus count after zero-padding
  double sum_skew = 0.0;
  std::optional<FuTwoChannelResult> fu_two; // N == 2 only
  std::optional<TupleBoundResult> thm3;     // N > 2 only
  TupleBoundResult thm4;
  bool search_exhaustive = true;
};

/// Pads every channel's Kraus list with zero matrices up to the maximum
/// count among the inputs. Zero elements leave both the channel action and
/// every skew value unchanged. Throws DimMismatch on mixed dimensions.
std::vector<KrausChannel> normalize_kraus_counts(const std::vector<KrausChannel>& channels,
                                                 const Tolerances& tol = {});

/// Two-channel bound max over pi in S_n and a uniform sign s in {+1,-1} of
///   (1/2) sum_i I_rho(K^1_i + s K^2_{pi(i)}).
/// Candidates are scanned with pi in lexicographic order (sign +1 before -1
/// inside each pi); ties keep the earliest candidate. Requires equal Kraus
/// counts (normalize_kraus_counts first).
FuTwoChannelResult fu_two_channel(const DensityState& rho, const KrausChannel& E1,
                                  const KrausChannel& E2,
                                  const PermSearchOptions& opts = {});

/// N-channel bound (N > 2), maximized over permutation tuples:
///   (1/(N-2)) { sum_{t<s} sum_i I(K^t_{pi_t(i)} + K^s_{pi_s(i)})
///               - (1/(N-1)^2) sum_i (sum_{t<s} sqrt(I(K^t_{pi_t(i)} + K^s_{pi_s(i)})))^2 }.
/// pi_1 is fixed to the identity: relabeling the summation index maps any
/// tuple onto one with pi_1 = id without changing the objective, so the
/// restriction is lossless and cuts the space to (n!)^(N-1). Ties resolve to
/// the lexicographically first tuple.
TupleBoundResult thm3_bound(const DensityState& rho,
                            const std::vector<KrausChannel>& channels,
                            const PermSearchOptions& opts = {});

/// N-channel bound (N >= 2), maximized over permutation tuples:
///   (1/N) sum_i I(sum_t K^t_{pi_t(i)})
///   + (2/(N^2(N-1))) sum_i (sum_{t<s} sqrt(I(K^t_{pi_t(i)} - K^s_{pi_s(i)})))^2.
/// Equals the skew-information sum exactly when N = 2 (for every tuple).
/// Same search conventions as thm3_bound.
TupleBoundResult thm4_bound(const DensityState& rho,
                            const std::vector<KrausChannel>& channels,
                            const PermSearchOptions& opts = {});

/// Two-channel splitting identity. Returns
///   (I(E1) + I(E2),
///    (1/2) sum_i [I(K^1_{pi1(i)} + K^2_{pi2(i)}) + I(K^1_{pi1(i)} - K^2_{pi2(i)})]).
/// The identity holds for every permutation pair; callers assert
/// |lhs - rhs| <= eq_tol. Throws BadPermutation for size mismatches.
std::pair<double, double> two_channel_identity(const DensityState& rho,
                                               const KrausChannel& E1,
                                               const KrausChannel& E2,
                                               const Permutation& pi1,
                                               const Permutation& pi2);

/// Full report for N >= 2 channels. Kraus counts are normalized internally;
/// thm3 is present iff N > 2 and fu_two iff N == 2.
ChannelBoundReport channel_report(const DensityState& rho,
                                  const std::vector<KrausChannel>& channels,
                                  const PermSearchOptions& opts = {},
                                  const Tolerances& tol = {});

/// True iff every defined bound b satisfies -eq_tol <= b <= sum_skew + eq_tol.
bool validity_ok(const ChannelBoundReport& rep, double eq_tol);

} // namespace skewinfo

#endif
