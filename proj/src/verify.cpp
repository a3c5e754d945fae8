#include "skewinfo/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "skewinfo/catalog.hpp"
#include "skewinfo/channel_bounds.hpp"
#include "skewinfo/json_io.hpp"
#include "skewinfo/observable_bounds.hpp"

namespace skewinfo {

namespace {

using nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

// Each property draws from its own generator so suites stay deterministic
// regardless of which subset runs.
std::uint64_t property_seed(std::uint64_t base, std::uint64_t index) {
  return base * 1000003ULL + index;
}

class PropertyRun {
public:
  PropertyRun(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  /// residual > tolerance counts as a violation; the first violating
  /// instance is serialized for replay.
  void record(double residual, const std::function<ordered_json()>& instance) {
    ++result_.trials;
    result_.worst_residual = std::max(result_.worst_residual, residual);
    if (residual > result_.tolerance) {
      if (result_.violations == 0) {
        result_.first_violation = instance();
      }
      ++result_.violations;
    }
  }

  PropertyResult finish() && { return std::move(result_); }

private:
  PropertyResult result_;
};

int draw_int(SeededGenerator& gen, int lo, int hi) { // inclusive range
  const int span = hi - lo + 1;
  int v = lo + static_cast<int>(gen.uniform() * span);
  return std::min(v, hi);
}

Eigen::VectorXcd random_vector(SeededGenerator& gen, int len) {
  Eigen::VectorXcd v(len);
  for (int i = 0; i < len; ++i) {
    v(i) = gen.complex_gaussian();
  }
  return v;
}

ordered_json vectors_json(const std::vector<Eigen::VectorXcd>& vecs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vecs) {
    ordered_json one = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      one.push_back(ordered_json::array({v(i).real(), v(i).imag()}));
    }
    arr.push_back(std::move(one));
  }
  return arr;
}

double relative_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// ---- lemmas: norm identities on random complex tuples ----

void run_lemmas(std::uint64_t trials, std::uint64_t seed, std::vector<PropertyResult>& out) {
  PropertyRun lemma1("lemma1_pairwise_sum_identity", 1e-10);
  PropertyRun lemma2("lemma2_pairwise_difference_identity", 1e-10);
  PropertyRun lemma3("lemma3_root_sum_inequality", 1e-10);
  SeededGenerator gen(property_seed(seed, 1));
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const int n = draw_int(gen, 3, 5);
    const int len = draw_int(gen, 1, 16);
    std::vector<Eigen::VectorXcd> a;
    for (int i = 0; i < n; ++i) {
      a.push_back(random_vector(gen, len));
    }
    const auto instance = [&] { return ordered_json{{"vectors", vectors_json(a)}}; };

    Eigen::VectorXcd total = Eigen::VectorXcd::Zero(len);
    double norm_sq_sum = 0.0;
    for (const auto& v : a) {
      total += v;
      norm_sq_sum += v.squaredNorm();
    }
    double plus_sq = 0.0, minus_sq = 0.0, minus_norm = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        plus_sq += (a[i] + a[j]).squaredNorm();
        const double d = (a[i] - a[j]).squaredNorm();
        minus_sq += d;
        minus_norm += std::sqrt(d);
      }
    }
    lemma1.record(relative_residual(plus_sq, total.squaredNorm() + (n - 2) * norm_sq_sum),
                  instance);
    lemma2.record(relative_residual(minus_sq, n * norm_sq_sum - total.squaredNorm()),
                  instance);
    // violation amount of (sum of norms)^2 <= (n(n-1)/2) * sum of squares
    lemma3.record(minus_norm * minus_norm - 0.5 * n * (n - 1) * minus_sq, instance);
  }
  out.push_back(std::move(lemma1).finish());
  out.push_back(std::move(lemma2).finish());
  out.push_back(std::move(lemma3).finish());
}

// ---- equalities: splitting identities and the two saturation laws ----

ordered_json observable_instance(const DensityState& rho,
                                 const std::vector<Observable>& obs) {
  ordered_json list = ordered_json::array();
  for (const Observable& M : obs) {
    list.push_back(matrix_to_json(M.matrix()));
  }
  return ordered_json{{"rho", matrix_to_json(rho.matrix())}, {"observables", std::move(list)}};
}

ordered_json channel_instance(const DensityState& rho,
                              const std::vector<KrausChannel>& channels) {
  ordered_json list = ordered_json::array();
  for (const KrausChannel& E : channels) {
    ordered_json kraus = ordered_json::array();
    for (const ComplexMatrix& K : E.kraus()) {
      kraus.push_back(matrix_to_json(K));
    }
    list.push_back(ordered_json{{"kraus", std::move(kraus)}});
  }
  return ordered_json{{"rho", matrix_to_json(rho.matrix())}, {"channels", std::move(list)}};
}

void run_equalities(std::uint64_t trials, std::uint64_t seed, const std::vector<int>& dims,
                    std::vector<PropertyResult>& out) {
  PropertyRun obs_identity("two_observable_splitting_identity", 1e-10);
  PropertyRun obs_saturation("lb1_saturation_two_observables", 1e-9);
  SeededGenerator gen(property_seed(seed, 2));
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (int d : dims) {
      const DensityState rho = random_state(d, gen);
      const std::vector<Observable> pair = {random_observable(d, gen),
                                            random_observable(d, gen)};
      const auto instance = [&] { return observable_instance(rho, pair); };
      const auto [lhs, rhs] = two_observable_identity(rho, pair[0], pair[1]);
      obs_identity.record(std::abs(lhs - rhs), instance);
      obs_saturation.record(std::abs(lb_tight(rho, pair) - lhs), instance);
    }
  }
  out.push_back(std::move(obs_identity).finish());
  out.push_back(std::move(obs_saturation).finish());

  PropertyRun chan_identity("two_channel_splitting_identity", 1e-10);
  PropertyRun chan_saturation("thm4_saturation_two_channels", 1e-9);
  SeededGenerator cgen(property_seed(seed, 3));
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (int d : dims) {
      const DensityState rho = random_state(d, cgen);
      const std::size_t n = static_cast<std::size_t>(draw_int(cgen, 1, 3));
      const std::vector<KrausChannel> pair = {random_channel(d, n, cgen),
                                              random_channel(d, n, cgen)};
      const auto instance = [&] { return channel_instance(rho, pair); };
      double worst = 0.0;
      for (const Permutation& pi1 : Permutation::all(n)) {
        for (const Permutation& pi2 : Permutation::all(n)) {
          const auto [lhs, rhs] = two_channel_identity(rho, pair[0], pair[1], pi1, pi2);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
      chan_identity.record(worst, instance);
      const double sum = skew_channel(rho, pair[0]) + skew_channel(rho, pair[1]);
      chan_saturation.record(std::abs(thm4_bound(rho, pair).bound - sum), instance);
    }
  }
  out.push_back(std::move(chan_identity).finish());
  out.push_back(std::move(chan_saturation).finish());
}

// ---- validity: every bound stays below its skew sum ----

void run_validity(std::uint64_t trials, std::uint64_t seed, const std::vector<int>& dims,
                  std::vector<PropertyResult>& out) {
  PropertyRun obs_validity("observable_bound_validity", 1e-9);
  SeededGenerator gen(property_seed(seed, 4));
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (int d : dims) {
      const DensityState rho = random_state(d, gen);
      std::vector<Observable> triple;
      for (int k = 0; k < 3; ++k) {
        triple.push_back(random_observable(d, gen));
      }
      const ObservableBoundReport rep = report(rho, triple);
      double excess = std::max(rep.lb0bar - rep.sum_skew, rep.lb1 - rep.sum_skew);
      if (rep.lb0) {
        excess = std::max(excess, *rep.lb0 - rep.sum_skew);
      }
      obs_validity.record(excess, [&] { return observable_instance(rho, triple); });
    }
  }
  out.push_back(std::move(obs_validity).finish());

  PropertyRun chan_validity("channel_bound_validity", 1e-9);
  SeededGenerator cgen(property_seed(seed, 5));
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const int d = 2;
    const DensityState rho = random_state(d, cgen);
    const int n_channels = draw_int(cgen, 2, 3);
    std::vector<KrausChannel> channels;
    for (int k = 0; k < n_channels; ++k) {
      channels.push_back(random_channel(d, static_cast<std::size_t>(draw_int(cgen, 1, 3)), cgen));
    }
    const ChannelBoundReport rep = channel_report(rho, channels);
    double excess = rep.thm4.bound - rep.sum_skew;
    if (rep.thm3) {
      excess = std::max(excess, rep.thm3->bound - rep.sum_skew);
    }
    if (rep.fu_two) {
      excess = std::max(excess, rep.fu_two->bound - rep.sum_skew);
    }
    chan_validity.record(excess, [&] { return channel_instance(rho, channels); });
  }
  out.push_back(std::move(chan_validity).finish());
}

// ---- corollary: qubit Pauli dominance gap against the closed form ----

void run_corollary(std::vector<PropertyResult>& out) {
  PropertyRun identity("corollary_gamma_identity", 1e-8);
  PropertyRun minimum("gamma_grid_minimum", 1e-6);
  const std::vector<Observable> paulis = pauli_observables();
  const double gamma_min = std::sqrt(3.0) - 4.0 / 3.0;
  double grid_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 60; ++i) {
    const double theta = kPi * i / 59.0;
    for (int j = 0; j < 30; ++j) {
      const double phi = 2.0 * kPi * j / 29.0;
      const double g = analytic::gamma(theta, phi);
      grid_min = std::min(grid_min, g);
      for (double t : {0.25, 0.5, 0.75, 1.0}) {
        const double radius = std::sqrt(t);
        const DensityState rho = bloch_qubit({radius * std::sin(theta) * std::cos(phi),
                                              radius * std::sin(theta) * std::sin(phi),
                                              radius * std::cos(theta)});
        const double gap = lb_tight(rho, paulis) - lb_pairwise(rho, paulis);
        const double residual = std::abs(gap - (1.0 - std::sqrt(1.0 - t)) * g);
        identity.record(residual, [&] {
          return ordered_json{{"theta", theta}, {"phi", phi}, {"t", t}};
        });
      }
    }
  }
  minimum.record(gamma_min - grid_min, [&] { return ordered_json{{"grid_min", grid_min}}; });
  out.push_back(std::move(identity).finish());
  out.push_back(std::move(minimum).finish());
}

} // namespace

SuiteReport run_suite(const std::string& suite, std::uint64_t trials, std::uint64_t seed,
                      const std::vector<int>& dims, const Tolerances& tol) {
  tol.validate();
  if (trials < 1) {
    throw DomainError("verify: trials must be >= 1");
  }
  if (dims.empty()) {
    throw DomainError("verify: at least one dimension is required");
  }
  for (int d : dims) {
    if (d < 2) {
      throw DomainError("verify: dimensions must be >= 2");
    }
  }
  SuiteReport report;
  report.suite = suite;
  report.seed = seed;
  report.trials = trials;
  report.dims = dims;

  if (suite == "lemmas" || suite == "all") {
    run_lemmas(trials, seed, report.properties);
  }
  if (suite == "equalities" || suite == "all") {
    run_equalities(trials, seed, dims, report.properties);
  }
  if (suite == "validity" || suite == "all") {
    run_validity(trials, seed, dims, report.properties);
  }
  if (suite == "corollary" || suite == "all") {
    run_corollary(report.properties);
  }
  if (report.properties.empty()) {
    throw DomainError("verify: unknown suite '" + suite +
                      "' (expected lemmas|equalities|validity|corollary|all)");
  }
  for (const PropertyResult& p : report.properties) {
    if (p.violations > 0) {
      report.pass = false;
    }
  }
  return report;
}

nlohmann::ordered_json suite_to_json(const SuiteReport& report) {
  ordered_json properties = ordered_json::array();
  for (const PropertyResult& p : report.properties) {
    properties.push_back(ordered_json{{"name", p.name},
                                      {"trials", p.trials},
                                      {"violations", p.violations},
                                      {"worst_residual", p.worst_residual},
                                      {"tolerance", p.tolerance},
                                      {"first_violation", p.first_violation}});
  }
  return ordered_json{{"suite", report.suite},   {"seed", report.seed},
                      {"trials", report.trials}, {"dims", report.dims},
                      {"pass", report.pass},     {"properties", std::move(properties)}};
}

} // namespace skewinfo
