#ifndef SKEWINFO_CATALOG_HPP
#define SKEWINFO_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "skewinfo/skew.hpp"

namespace skewinfo {

/// Real three-vector parameterizing a qubit state rho = (I + r.sigma)/2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double t() const { return x * x + y * y + z * z; }
};

/// Deterministic Gaussian source. The engine is std::mt19937_64 (fully
/// specified by the standard) and normal deviates come from an explicit
/// Box-Muller transform, so identical seeds produce identical streams on
/// every platform. Not safe for concurrent draws from one instance.
class SeededGenerator {
public:
  static constexpr const char* algorithm = "mt19937_64/box-muller";

  explicit SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  /// Standard normal deviate.
  double gaussian();
  /// re and im independent standard normals, drawn in that order.
  std::complex<double> complex_gaussian();

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Qubit state from a Bloch vector; eigenvalues are (1 +- sqrt(t))/2.
/// Throws OutsideBlochBall when t > 1 + 1e-12.
DensityState bloch_qubit(const BlochVector& r, const Tolerances& tol = {});

/// {sigma_x, sigma_y, sigma_z}.
std::vector<Observable> pauli_observables();

/// Spin-1 angular momentum operators {L_x, L_y, L_z} over the basis
/// (|1>, |0>, |-1>), in that order. spin1_pure_state uses the same ordering;
/// mixing the two conventions silently breaks every spin-1 identity.
std::vector<Observable> spin1_observables();

/// Pure spin-1 state sin(theta)cos(phi)|1> + sin(theta)sin(phi)|0> + cos(theta)|-1>.
/// Requires theta in [0, pi], phi in [0, 2pi].
DensityState spin1_pure_state(double theta, double phi, const Tolerances& tol = {});

/// Qutrit family: (1/3) of the identity plus an imaginary antisymmetric part
/// with weights a*cos(alpha), a*sin(alpha)cos(beta), a*sin(alpha)sin(beta).
/// Domain: |a| <= 1/sqrt(3), 0 < alpha < pi (strict; boundary values are
/// rejected rather than extrapolated), 0 <= beta <= 2pi. The constructor
/// validates positivity instead of trusting the parameter domain.
DensityState qutrit_family(double a, double alpha, double beta, const Tolerances& tol = {});

/// Phase damping: {|0><0| + sqrt(1-q)|1><1|, sqrt(q)|1><1|}, q in [0,1].
KrausChannel phase_damping(double q, const Tolerances& tol = {});
/// Amplitude damping: {|0><0| + sqrt(1-q)|1><1|, sqrt(q)|0><1|}, q in [0,1].
KrausChannel amplitude_damping(double q, const Tolerances& tol = {});
/// Bit flip: {sqrt(q) I, sqrt(1-q) sigma_x}, q in [0,1].
KrausChannel bit_flip(double q, const Tolerances& tol = {});
/// Single-element identity channel {I_dim}.
KrausChannel identity_channel(Eigen::Index dim, const Tolerances& tol = {});

/// rho = G G^dag / Tr(G G^dag) with G filled row-major from complex_gaussian.
DensityState random_state(Eigen::Index dim, SeededGenerator& gen, const Tolerances& tol = {});

/// Rank-one state from a normalized complex Gaussian vector.
DensityState random_pure_state(Eigen::Index dim, SeededGenerator& gen, const Tolerances& tol = {});

/// (G + G^dag)/2 with G filled row-major from complex_gaussian.
Observable random_observable(Eigen::Index dim, SeededGenerator& gen, const Tolerances& tol = {});

/// n_kraus Ginibre matrices G_i right-whitened by (sum_i G_i^dag G_i)^(-1/2),
/// which makes the completeness relation exact up to roundoff.
KrausChannel random_channel(Eigen::Index dim, std::size_t n_kraus, SeededGenerator& gen,
                            const Tolerances& tol = {});

/// Closed-form reference values used as oracles by the test and verify
/// suites. The numerical pipeline never calls these; figures carry pipeline
/// outputs and the tests compare the two.
namespace analytic {

/// Skew-information sum of the three Paulis on a qubit of radius sqrt(t):
/// 2(1 - sqrt(1-t)), t in [0, 1].
double pauli_sum(double t);

/// The three lower bounds along the circle r = (sqrt(3)/2)(cos t, sin t, 0).
double example1_lb1(double theta);
double example1_lb0(double theta);
double example1_lb0bar(double theta);

/// Square-bracket aggregates entering the qubit Pauli bounds; require t > 0.
double alpha(double x, double y, double z);
double beta(double x, double y, double z);

/// Spherical form of the qubit dominance gap:
/// lb1 - lb0 = (1 - sqrt(1-t)) * gamma(theta, phi) for Pauli observables.
/// Radius-independent; its minimum over the sphere is sqrt(3) - 4/3.
double gamma(double theta, double phi);

/// Skew-information sum of {L_x, L_y, L_z} on the spin-1 pure-state family.
double spin1_sum(double theta, double phi);

} // namespace analytic

} // namespace skewinfo

#endif
