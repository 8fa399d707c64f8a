#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "fejerlab/grid.hpp"
#include "fejerlab/piecewise.hpp"
#include "fejerlab/sampled.hpp"

namespace fejerlab {

/// Selects one of the two weighted norms ||f w||_1 and ||f / w||_inf.
enum class SpaceTag { WeightedL1, WeightedLinf };

const char* to_string(SpaceTag tag) noexcept;

/// The spike weight truncated at order M:
///   sqrt(m) on pi/(2m) <= |theta| <= pi/(2m-1),   m = 1..M,
///   1       on pi/(2m+1) < |theta| < pi/(2m),     m = 1..M-1,
///   1       on |theta| < pi/(2M).
class Weight {
 public:
  [[nodiscard]] int order() const noexcept { return order_; }

  /// Exact step profile (value sqrt(m) on spike m, 1 elsewhere).
  [[nodiscard]] const PiecewiseConstant& profile() const noexcept { return profile_; }

  /// w(theta). Spike intervals are closed: at a spike endpoint the spike value wins.
  [[nodiscard]] double operator()(double theta) const;

  /// Spike index m whose closed interval contains |theta|, or 0.
  [[nodiscard]] int spike_at(double theta) const;

  /// w at every node. Throws GridTooCoarse unless grid.order() >= order().
  [[nodiscard]] std::vector<double> on_grid(const CircleGrid& grid) const;

  /// ||w||_{L^1} of the truncated weight, exact.
  [[nodiscard]] double l1_norm() const;

 private:
  friend Weight make_weight(int M);
  int order_ = 0;
  PiecewiseConstant profile_;
};

/// Throws InvalidArgument when M < 1.
Weight make_weight(int M);

struct SeriesBracket {
  double partial = 0.0;     ///< both series of ||w||_1 summed to M_terms
  double tail_bound = 0.0;  ///< rigorous bound on the omitted remainder
};

/// Partial sums of ||w||_{L^1} = sum (1/(2m) - 1/(2m+1)) + sum sqrt(m) (1/(2m-1) - 1/(2m)).
SeriesBracket weight_l1_norm_series(long long M_terms);

/// The one-sided spike test function sqrt(m) on [pi/(2m), pi/(2m-1)].
PiecewiseConstant make_bump(int m);

double norm(const PiecewiseConstant& f, const Weight& w, SpaceTag tag);

/// Midpoint-rule norm over the grid of f (w sampled at the nodes).
double norm(const SampledFunction& f, const Weight& w, SpaceTag tag);

/// Same norm for a vector of node values; an empty weight span means w = 1.
double norm(std::span<const complex> values, const CircleGrid& grid,
            std::span<const double> w_nodes, SpaceTag tag);

/// Unweighted L^1 / L^inf norms.
double l1_norm(const PiecewiseConstant& f);
double linf_norm(const PiecewiseConstant& f);

struct HolderReport {
  complex pairing;        ///< int f g dm
  double norm_f_l1w = 0;  ///< ||f||_{L^1(w)}
  double norm_g_linfw = 0;///< ||g||_{L^inf(w^-1)}

  [[nodiscard]] bool holds(double rel_slack = 1e-10) const {
    return std::abs(pairing) <= norm_f_l1w * norm_g_linfw * (1.0 + rel_slack) + 1e-300;
  }
};

/// Exact pairing of two step functions.
HolderReport holder_pairing(const PiecewiseConstant& f, const PiecewiseConstant& g,
                            const Weight& w);

/// Midpoint pairing of two functions sampled on the same grid.
HolderReport holder_pairing(const SampledFunction& f, const SampledFunction& g,
                            const Weight& w);

}  // namespace fejerlab
