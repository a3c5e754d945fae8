#ifndef SKEWINFO_FIGURES_HPP
#define SKEWINFO_FIGURES_HPP

#include <filesystem>
#include <string>

#include "skewinfo/linalg.hpp"

namespace skewinfo {

/// One reproducible CSV dataset. Figures:
///   fig1  theta,phi,gamma             qubit dominance-gap surface
///   fig2  theta,sum,lb1,lb0,lb0bar    Bloch-circle family with Paulis
///   fig3  theta,phi,sum,lb1,lb0,lb0bar  spin-1 pure states with L ops
///         (slice: phi = pi/4, drops the phi column)
///   fig4  alpha,beta,sum,lb1,lb0,lb0bar qutrit family at |a| = 1/sqrt(3)
///         (slice: beta = pi/2, drops the beta column)
///   fig5  theta,sum,thm3,thm4         three damping channels at fixed q
///
/// Every value is computed through the numerical pipeline; the closed-form
/// references live in catalog and are used only by tests.
///
/// Grid conventions: theta/phi axes of fig1 sample the left endpoints of res
/// uniform subdivisions (phi is periodic; this also places the known gamma
/// minimizer (pi/2, 3pi/4) on the default grid). fig2/fig3/fig5 grids include
/// both endpoints. fig4's alpha axis uses midpoints because its domain is
/// open at 0 and pi.
struct FigureSpec {
  std::string id;     // "fig1" ... "fig5"
  int res = 0;        // points per axis; 0 selects the per-figure default
  bool slice = false; // fig3/fig4 slice variants
  double t = 0.75;    // fig1: squared Bloch radius of the evaluation family
  double q = 0.1;     // fig5: damping parameter

  /// Defaults: fig1 120 (theta; phi gets 2*res), fig2 400, fig3 90, fig4 90,
  /// fig5 400.
  int effective_res() const;
};

/// Renders the CSV (header row + data rows, '\n' endings, 12 significant
/// digits). Throws DomainError for unknown ids, res < 2 (when given), or
/// parameters outside their catalog domains.
std::string figure_csv(const FigureSpec& spec);

/// Writes figure_csv(spec) to the given path, byte-for-byte reproducible.
void write_figure(const FigureSpec& spec, const std::filesystem::path& out);

} // namespace skewinfo

#endif
