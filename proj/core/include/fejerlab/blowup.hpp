#pragma once

#include <span>
#include <vector>

#include "fejerlab/grid.hpp"
#include "fejerlab/weight.hpp"

namespace fejerlab {

/// Fejer order and inner offset for which the Fejer mass near the origin is
/// large enough to push sqrt(m)/(8 pi) through the bump v_m.
struct LocalizationParams {
  int m = 0;
  int n_of_m = 0;
  double delta_n = 0.0;
  double half_mass = 0.0;     ///< int_{-pi/(2m)^2}^0 F_n, closed form (>= 1/3)
  double trimmed_mass = 0.0;  ///< int_{-pi/(2m)^2}^{-delta_n} F_n, closed form (>= 1/4)
  double half_mass_quadrature = 0.0;     ///< same integrals by Gauss-Legendre
  double trimmed_mass_quadrature = 0.0;  ///< quadrature of the closed-form kernel
};

/// Smallest n <= n_max with int_{-a}^0 F_n >= 1/3, a = pi/(2m)^2, and the
/// largest delta = pi/(2m) - b over grid breakpoints b in (pi/(2m) - a,
/// pi/(2m)) with int_{-a}^{-delta} F_n >= 1/4. Throws NoQualifyingN.
LocalizationParams localization_params(int m, int n_max, const CircleGrid& grid);

/// Unnormalized integral int_lo^hi F_n(theta) dtheta from the closed-form primitive.
double fejer_mass(int n, double lo, double hi);

struct BlowupRow {
  int m = 0;
  int n_m = 0;
  double delta_n = 0.0;
  double bound = 0.0;          ///< sqrt(m) / (8 pi)
  double pointwise_min = 0.0;  ///< min of (C_{F_n} v_m)(theta) over nodes in [pi/(2m) - delta_n, pi/(2m)]
  double norm_linfw = 0.0;     ///< streamed row formula
  double norm_l1w = 0.0;       ///< assembled column formula
  double upper_bound_l1w = 0.0;///< ||F_n||_inf ||w||_1 ||1/w||_inf
};

struct BlowupOptions {
  int n_max = 200000;
  /// Assemble the full matrix for the column-formula norm. When false both
  /// norms come from the streamed evaluation.
  bool assemble = true;
};

/// Runs the blow-up experiment for every m. Throws GridTooCoarse when the grid
/// does not resolve pi/(2m)^2 or does not refine w, and propagates
/// NoQualifyingN.
std::vector<BlowupRow> fejer_blowup(std::span<const int> m_list, const Weight& w,
                                    GridPtr grid, const BlowupOptions& options = {});

}  // namespace fejerlab
