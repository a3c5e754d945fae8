#ifndef SKEWINFO_VERIFY_HPP
#define SKEWINFO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewinfo/linalg.hpp"

namespace skewinfo {

/// Outcome of one property checked over many random (or gridded) instances.
struct PropertyResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  double worst_residual = 0.0; // largest observed residual, violating or not
  double tolerance = 0.0;
  /// Serialized first violating instance for replay; null when none.
  nlohmann::ordered_json first_violation = nullptr;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<int> dims;
  bool pass = true;
  std::vector<PropertyResult> properties;
};

/// Runs one verification suite. Deterministic given (suite, trials, seed,
/// dims): every property derives its own generator from the base seed.
///
///   lemmas      vector-norm identities and the Cauchy-Schwarz inequality
///               on random complex tuples (n in {3,4,5}, length <= 16)
///   equalities  two-observable and two-channel splitting identities, and
///               the N=2 channel-bound saturation
///   validity    every bound <= its skew sum on random observable triples
///               and random channel pairs/triples
///   corollary   qubit Pauli dominance gap against the closed form on a
///               60x30 spherical grid at t in {0.25, 0.5, 0.75, 1.0}
///   all         everything above
///
/// Throws DomainError for unknown suite names or trials < 1.
SuiteReport run_suite(const std::string& suite, std::uint64_t trials, std::uint64_t seed,
                      const std::vector<int>& dims, const Tolerances& tol = {});

nlohmann::ordered_json suite_to_json(const SuiteReport& report);

} // namespace skewinfo

#endif
