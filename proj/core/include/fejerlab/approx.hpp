#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fejerlab/fourier.hpp"
#include "fejerlab/grid.hpp"
#include "fejerlab/piecewise.hpp"
#include "fejerlab/sampled.hpp"
#include "fejerlab/weight.hpp"

namespace fejerlab {

/// Analytic polynomial q(t) = sum_{k=0}^{n} alpha_k t^k, t = e^{i theta}.
class PolyCoeffs {
 public:
  PolyCoeffs() = default;
  explicit PolyCoeffs(std::vector<complex> alpha);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(alpha_.size()) - 1; }
  [[nodiscard]] std::span<const complex> coeffs() const noexcept { return alpha_; }
  [[nodiscard]] complex operator()(double theta) const;

  /// Coefficients padded with zeros (or truncated) to `degree`.
  [[nodiscard]] PolyCoeffs resized(int degree) const;

  /// Nonnegative-index part of a Fourier window, truncated to `degree`.
  static PolyCoeffs from_fourier(const FourierCoefficients& f, int degree);

 private:
  std::vector<complex> alpha_{complex{}};
};

struct IrlsConfig {
  int max_iters = 200;
  double smoothing = 1e-8;  ///< epsilon in the weights quad_i w_i / max(|r_i|, epsilon)
  double tol = 1e-10;       ///< relative decrease of the smoothed objective that counts as converged
};

struct BestPoly {
  PolyCoeffs poly;
  double error = 0.0;                    ///< sum_i |f_i - q(theta_i)| w_i q_i
  int iterations = 0;
  bool converged = false;
  bool monotone = true;                  ///< smoothed objective never increased
  std::vector<double> smoothed_history;  ///< smoothed objective per iterate
};

/// Weighted-L^1 best approximation by analytic polynomials of the given
/// degree via iteratively reweighted least squares. Each entry of
/// `candidates` is evaluated and the best one seeds the iteration; the
/// returned polynomial is the iterate with the smallest true objective, so
/// the error never exceeds that of any candidate. A missing weight means w = 1.
BestPoly best_poly_l1w(const SampledFunction& f, const Weight* w, int degree,
                       const IrlsConfig& cfg = {},
                       std::span<const PolyCoeffs> candidates = {});

/// Weighted L^1 distance between f and q in the discrete (midpoint) norm.
double poly_error_l1w(const SampledFunction& f, const Weight* w, const PolyCoeffs& q);

struct DensityPoint {
  int degree = 0;
  double error = 0.0;        ///< best polynomial error
  double fejer_error = 0.0;  ///< ||f - f*F_n||_{L^1(w)} in the same discrete norm
  bool converged = false;
};

/// Best-approximation errors per degree. `spectrum` gives f^(k) (at least up
/// to the largest degree) for the Fejer candidate; degrees are processed in
/// increasing order, each warm-started from the previous optimum.
std::vector<DensityPoint> density_curve(const SampledFunction& f,
                                        const FourierCoefficients& spectrum,
                                        const Weight* w, std::span<const int> degrees,
                                        const IrlsConfig& cfg = {});

/// ||f * F_n - f|| per n for a step function, in the exact cell-average model
/// on `grid` (weighted L^1 when w is given, unweighted otherwise).
std::vector<double> fejer_error_curve(const PiecewiseConstant& f, GridPtr grid,
                                      const Weight* w, std::span<const int> n_list);

/// Same for a grid function taken as constant on cells.
std::vector<double> fejer_error_curve(const SampledFunction& f, const Weight* w,
                                      std::span<const int> n_list);

/// Point-sampled version: f * F_n is synthesized at the nodes from the given
/// spectrum and compared with the samples in the midpoint norm.
std::vector<double> fejer_error_curve(const SampledFunction& f,
                                      const FourierCoefficients& spectrum,
                                      const Weight* w, std::span<const int> n_list);

struct WitnessOptions {
  int stages = 3;
  double target = 1.0;
  double ratio = 0.5;        ///< c_k = ratio^k
  int n_start = 8;
  int n_max = 1 << 15;
  double n_growth = 1.25;    ///< geometric ladder of candidate orders
  int retries = 4;           ///< raises of the per-stage requirement before failing
  bool growing_norms = true; ///< each stage needs a larger operator norm than the last
};

struct WitnessStage {
  int n = 0;
  std::size_t cell = 0;       ///< support of the extremal bump
  double theta = 0.0;         ///< its node
  double coefficient = 0.0;   ///< c_k
  double operator_norm = 0.0; ///< ||C_{F_n}||_{B(L^1(w))} on the grid
  double error = 0.0;         ///< ||f*F_n - f||_{L^1(w)} recomputed on the final f
};

struct WitnessReport {
  std::vector<WitnessStage> stages;
  SampledFunction f;
  double f_norm = 0.0;        ///< ||f||_{L^1(w)}
  int attempts = 1;
};

/// Gliding-hump construction f = sum_k c_k g_k from unit-norm extremal inputs
/// of ||C_{F_{n_k}}||_{B(L^1(w))}. Throws StageFailure when a stage cannot
/// reach the target with n <= n_max.
WitnessReport gliding_hump_witness(const Weight& w, GridPtr grid,
                                   const WitnessOptions& options = {});

}  // namespace fejerlab
