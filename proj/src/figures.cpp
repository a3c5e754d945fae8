#include "skewinfo/figures.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "skewinfo/catalog.hpp"
#include "skewinfo/channel_bounds.hpp"
#include "skewinfo/json_io.hpp"
#include "skewinfo/observable_bounds.hpp"

namespace skewinfo {

namespace {

constexpr double kPi = std::numbers::pi;

void append_row(std::string& out, const std::vector<double>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += format_sig12(cells[i]);
  }
  out += '\n';
}

// res points covering [lo, hi] with both endpoints included
double inclusive(double lo, double hi, int res, int i) {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(res - 1);
}

std::string fig1(int res, double t) {
  if (t <= 0.0 || t > 1.0) {
    throw DomainError("fig1: t must lie in (0, 1]");
  }
  const int n_theta = res;
  const int n_phi = 2 * res;
  const std::vector<Observable> paulis = pauli_observables();
  const double denom = 1.0 - std::sqrt(1.0 - t);
  const double radius = std::sqrt(t);
  std::string out = "theta,phi,gamma\n";
  for (int i = 0; i < n_theta; ++i) {
    const double theta = kPi * i / n_theta; // left endpoints; phi is periodic
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * kPi * j / n_phi;
      const BlochVector r{radius * std::sin(theta) * std::cos(phi),
                          radius * std::sin(theta) * std::sin(phi),
                          radius * std::cos(theta)};
      const DensityState rho = bloch_qubit(r);
      const double gap = lb_tight(rho, paulis) - lb_pairwise(rho, paulis);
      append_row(out, {theta, phi, gap / denom});
    }
  }
  return out;
}

std::string fig2(int res) {
  const std::vector<Observable> paulis = pauli_observables();
  const double radius = std::sqrt(3.0) / 2.0;
  std::string out = "theta,sum,lb1,lb0,lb0bar\n";
  for (int i = 0; i < res; ++i) {
    const double theta = inclusive(0.0, kPi, res, i);
    const DensityState rho =
        bloch_qubit({radius * std::cos(theta), radius * std::sin(theta), 0.0});
    append_row(out, {theta, sum_skew(rho, paulis), lb_tight(rho, paulis),
                     lb_pairwise(rho, paulis), lb_gram(rho, paulis)});
  }
  return out;
}

std::string fig3(int res, bool slice) {
  const std::vector<Observable> ls = spin1_observables();
  std::string out;
  const auto row = [&](double theta, double phi, bool with_phi) {
    const DensityState rho = spin1_pure_state(theta, phi);
    std::vector<double> cells;
    cells.push_back(theta);
    if (with_phi) {
      cells.push_back(phi);
    }
    cells.push_back(sum_skew(rho, ls));
    cells.push_back(lb_tight(rho, ls));
    cells.push_back(lb_pairwise(rho, ls));
    cells.push_back(lb_gram(rho, ls));
    append_row(out, cells);
  };
  if (slice) {
    out = "theta,sum,lb1,lb0,lb0bar\n";
    for (int i = 0; i < res; ++i) {
      row(inclusive(0.0, kPi, res, i), kPi / 4.0, false);
    }
  } else {
    out = "theta,phi,sum,lb1,lb0,lb0bar\n";
    for (int i = 0; i < res; ++i) {
      for (int j = 0; j < res; ++j) {
        row(inclusive(0.0, kPi, res, i), inclusive(0.0, 2.0 * kPi, res, j), true);
      }
    }
  }
  return out;
}

std::string fig4(int res, bool slice) {
  const std::vector<Observable> ls = spin1_observables();
  const double a = 1.0 / std::sqrt(3.0);
  std::string out;
  const auto row = [&](double alpha, double beta, bool with_beta) {
    const DensityState rho = qutrit_family(a, alpha, beta);
    std::vector<double> cells;
    cells.push_back(alpha);
    if (with_beta) {
      cells.push_back(beta);
    }
    cells.push_back(sum_skew(rho, ls));
    cells.push_back(lb_tight(rho, ls));
    cells.push_back(lb_pairwise(rho, ls));
    cells.push_back(lb_gram(rho, ls));
    append_row(out, cells);
  };
  if (slice) {
    out = "alpha,sum,lb1,lb0,lb0bar\n";
    for (int i = 0; i < res; ++i) {
      row(kPi * (i + 0.5) / res, kPi / 2.0, false); // midpoints: (0, pi) is open
    }
  } else {
    out = "alpha,beta,sum,lb1,lb0,lb0bar\n";
    for (int i = 0; i < res; ++i) {
      for (int j = 0; j < res; ++j) {
        row(kPi * (i + 0.5) / res, inclusive(0.0, 2.0 * kPi, res, j), true);
      }
    }
  }
  return out;
}

std::string fig5(int res, double q) {
  if (q < 0.0 || q > 1.0) {
    throw DomainError("fig5: q must lie in [0, 1]");
  }
  const std::vector<KrausChannel> channels = {phase_damping(q), amplitude_damping(q),
                                              bit_flip(q)};
  const double radius = std::sqrt(3.0) / 2.0;
  std::string out = "theta,sum,thm3,thm4\n";
  for (int i = 0; i < res; ++i) {
    const double theta = inclusive(0.0, kPi, res, i);
    const DensityState rho =
        bloch_qubit({radius * std::cos(theta), radius * std::sin(theta), 0.0});
    double sum = 0.0;
    for (const KrausChannel& E : channels) {
      sum += skew_channel(rho, E);
    }
    append_row(out, {theta, sum, thm3_bound(rho, channels).bound,
                     thm4_bound(rho, channels).bound});
  }
  return out;
}

} // namespace

int FigureSpec::effective_res() const {
  if (res != 0) {
    return res;
  }
  if (id == "fig1") return 120;
  if (id == "fig2" || id == "fig5") return 400;
  return 90; // fig3, fig4
}

std::string figure_csv(const FigureSpec& spec) {
  if (spec.res != 0 && spec.res < 2) {
    throw DomainError("figure resolution must be >= 2");
  }
  const int res = spec.effective_res();
  if (spec.id == "fig1") return fig1(res, spec.t);
  if (spec.id == "fig2") return fig2(res);
  if (spec.id == "fig3") return fig3(res, spec.slice);
  if (spec.id == "fig4") return fig4(res, spec.slice);
  if (spec.id == "fig5") return fig5(res, spec.q);
  throw DomainError("unknown figure id: " + spec.id);
}

void write_figure(const FigureSpec& spec, const std::filesystem::path& out) {
  const std::string csv = figure_csv(spec);
  std::ofstream stream(out, std::ios::binary);
  if (!stream) {
    throw DomainError("cannot open output file: " + out.string());
  }
  stream << csv;
}

} // namespace skewinfo
