#include "skewinfo/catalog.hpp"

#include <cmath>
#include <numbers>

namespace skewinfo {

namespace {

using cxd = std::complex<double>;
constexpr cxd kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// sqrt(max(0, v)): radicands below are nonnegative by construction but can
// dip to -1e-16 in floating point at their zeros.
double root0(double v) { return std::sqrt(std::max(0.0, v)); }

ComplexMatrix ginibre(Eigen::Index dim, SeededGenerator& gen) {
  ComplexMatrix G(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      G(i, j) = gen.complex_gaussian();
    }
  }
  return G;
}

} // namespace

double SeededGenerator::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededGenerator::gaussian() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform(); // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  spare_ = radius * std::sin(2.0 * kPi * u2);
  return radius * std::cos(2.0 * kPi * u2);
}

std::complex<double> SeededGenerator::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

DensityState bloch_qubit(const BlochVector& r, const Tolerances& tol) {
  if (r.t() > 1.0 + 1e-12) {
    throw OutsideBlochBall("bloch_qubit: ||r|| exceeds 1");
  }
  ComplexMatrix rho(2, 2);
  rho << 0.5 * (1.0 + r.z), 0.5 * cxd(r.x, -r.y), 0.5 * cxd(r.x, r.y), 0.5 * (1.0 - r.z);
  return DensityState(std::move(rho), tol);
}

std::vector<Observable> pauli_observables() {
  return {Observable(pauli_x()), Observable(pauli_y()), Observable(pauli_z())};
}

std::vector<Observable> spin1_observables() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix lx(3, 3), ly(3, 3), lz(3, 3);
  lx << 0, s, 0, s, 0, s, 0, s, 0;
  ly << 0, -s * kI, 0, s * kI, 0, -s * kI, 0, s * kI, 0;
  lz << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  return {Observable(std::move(lx)), Observable(std::move(ly)), Observable(std::move(lz))};
}

DensityState spin1_pure_state(double theta, double phi, const Tolerances& tol) {
  if (theta < 0.0 || theta > kPi || phi < 0.0 || phi > 2.0 * kPi) {
    throw DomainError("spin1_pure_state: theta in [0,pi], phi in [0,2pi]");
  }
  Eigen::Vector3cd psi;
  psi << std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta);
  return DensityState(psi * psi.adjoint(), tol);
}

DensityState qutrit_family(double a, double alpha, double beta, const Tolerances& tol) {
  if (std::abs(a) > 1.0 / std::sqrt(3.0) + 1e-12 || !(alpha > 0.0 && alpha < kPi) ||
      beta < 0.0 || beta > 2.0 * kPi) {
    throw OutsideParameterDomain(
        "qutrit_family: need |a| <= 1/sqrt(3), 0 < alpha < pi, 0 <= beta <= 2pi");
  }
  const cxd w = std::sqrt(3.0) * a * kI;
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  ComplexMatrix rho(3, 3);
  rho << 1.0, -w * ca, -w * sa * cb,
         w * ca, 1.0, -w * sa * sb,
         w * sa * cb, w * sa * sb, 1.0;
  rho /= 3.0;
  return DensityState(std::move(rho), tol); // also rejects any PSD violation
}

KrausChannel phase_damping(double q, const Tolerances& tol) {
  if (q < 0.0 || q > 1.0) {
    throw ParamOutOfRange("phase_damping: q must lie in [0,1]");
  }
  ComplexMatrix k1(2, 2), k2(2, 2);
  k1 << 1, 0, 0, std::sqrt(1.0 - q);
  k2 << 0, 0, 0, std::sqrt(q);
  return KrausChannel({std::move(k1), std::move(k2)}, tol);
}

KrausChannel amplitude_damping(double q, const Tolerances& tol) {
  if (q < 0.0 || q > 1.0) {
    throw ParamOutOfRange("amplitude_damping: q must lie in [0,1]");
  }
  ComplexMatrix k1(2, 2), k2(2, 2);
  k1 << 1, 0, 0, std::sqrt(1.0 - q);
  k2 << 0, std::sqrt(q), 0, 0;
  return KrausChannel({std::move(k1), std::move(k2)}, tol);
}

KrausChannel bit_flip(double q, const Tolerances& tol) {
  if (q < 0.0 || q > 1.0) {
    throw ParamOutOfRange("bit_flip: q must lie in [0,1]");
  }
  return KrausChannel({std::sqrt(q) * ComplexMatrix::Identity(2, 2),
                       std::sqrt(1.0 - q) * pauli_x()},
                      tol);
}

KrausChannel identity_channel(Eigen::Index dim, const Tolerances& tol) {
  return KrausChannel({ComplexMatrix::Identity(dim, dim)}, tol);
}

DensityState random_state(Eigen::Index dim, SeededGenerator& gen, const Tolerances& tol) {
  const ComplexMatrix G = ginibre(dim, gen);
  ComplexMatrix rho = G * G.adjoint();
  rho /= rho.trace().real();
  return DensityState(std::move(rho), tol);
}

DensityState random_pure_state(Eigen::Index dim, SeededGenerator& gen,
                               const Tolerances& tol) {
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    psi(i) = gen.complex_gaussian();
  }
  psi /= psi.norm();
  return DensityState(psi * psi.adjoint(), tol);
}

Observable random_observable(Eigen::Index dim, SeededGenerator& gen, const Tolerances& tol) {
  const ComplexMatrix G = ginibre(dim, gen);
  return Observable(0.5 * (G + G.adjoint()), tol);
}

KrausChannel random_channel(Eigen::Index dim, std::size_t n_kraus, SeededGenerator& gen,
                            const Tolerances& tol) {
  std::vector<ComplexMatrix> raw;
  raw.reserve(n_kraus);
  ComplexMatrix gram = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < n_kraus; ++i) {
    raw.push_back(ginibre(dim, gen));
    gram += raw.back().adjoint() * raw.back();
  }
  // gram is positive definite almost surely; whiten on the right
  const HermitianEig eig = hermitian_eig(gram);
  Eigen::VectorXd inv_root(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < inv_root.size(); ++i) {
    inv_root(i) = 1.0 / std::sqrt(eig.eigenvalues(i));
  }
  const ComplexMatrix whiten =
      eig.eigenvectors * inv_root.asDiagonal() * eig.eigenvectors.adjoint();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n_kraus);
  for (const ComplexMatrix& G : raw) {
    kraus.push_back(G * whiten);
  }
  return KrausChannel(std::move(kraus), tol);
}

namespace analytic {

double pauli_sum(double t) {
  if (t < 0.0 || t > 1.0 + 1e-12) {
    throw DomainError("pauli_sum: t must lie in [0,1]");
  }
  return 2.0 * (1.0 - std::sqrt(std::max(0.0, 1.0 - t)));
}

double example1_lb1(double theta) {
  const double s2 = std::sin(2.0 * theta);
  const double c2 = std::cos(2.0 * theta);
  const double bracket = root0(2.0 + 2.0 * s2) + root0(3.0 - c2) + root0(3.0 + c2);
  return (2.0 - s2) / 6.0 + bracket * bracket / 36.0;
}

double example1_lb0(double theta) {
  const double s2 = std::sin(2.0 * theta);
  const double c2 = std::cos(2.0 * theta);
  const double bracket = root0(2.0 - 2.0 * s2) + root0(3.0 - c2) + root0(3.0 + c2);
  return 2.0 - 0.5 * s2 - bracket * bracket / 16.0;
}

double example1_lb0bar(double theta) { return (2.0 - std::sin(2.0 * theta)) / 4.0; }

double alpha(double x, double y, double z) {
  const double t = x * x + y * y + z * z;
  if (t <= 0.0 || t > 1.0 + 1e-12) {
    throw DomainError("alpha: need 0 < x^2+y^2+z^2 <= 1");
  }
  return std::sqrt(1.0 - std::sqrt(std::max(0.0, 1.0 - t))) *
         (root0(1.0 + (z * z + 2.0 * x * y) / t) + root0(1.0 + (y * y + 2.0 * x * z) / t) +
          root0(1.0 + (x * x + 2.0 * y * z) / t));
}

double beta(double x, double y, double z) {
  const double t = x * x + y * y + z * z;
  if (t <= 0.0 || t > 1.0 + 1e-12) {
    throw DomainError("beta: need 0 < x^2+y^2+z^2 <= 1");
  }
  return std::sqrt(1.0 - std::sqrt(std::max(0.0, 1.0 - t))) *
         (root0(1.0 + (z * z - 2.0 * x * y) / t) + root0(1.0 + (y * y - 2.0 * x * z) / t) +
          root0(1.0 + (x * x - 2.0 * y * z) / t));
}

double gamma(double theta, double phi) {
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  const double plus = root0(1.0 + ct * ct + 2.0 * st * st * cp * sp) +
                      root0(1.0 + st * st * sp * sp + 2.0 * st * ct * cp) +
                      root0(1.0 + st * st * cp * cp + 2.0 * st * ct * sp);
  const double minus = root0(1.0 + ct * ct - 2.0 * st * st * cp * sp) +
                       root0(1.0 + st * st * sp * sp - 2.0 * st * ct * cp) +
                       root0(1.0 + st * st * cp * cp - 2.0 * st * ct * sp);
  return -10.0 / 3.0 +
         4.0 / 3.0 * (st * st * cp * sp + st * ct * cp + st * ct * sp) +
         plus * plus / 9.0 + minus * minus / 4.0;
}

double spin1_sum(double theta, double phi) {
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  const double mid = ct * ct - st * st * cp * cp;
  return 2.0 - 2.0 * st * st * sp * sp * (ct + st * cp) * (ct + st * cp) - mid * mid;
}

} // namespace analytic

} // namespace skewinfo
