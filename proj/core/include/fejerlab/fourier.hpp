#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fejerlab/grid.hpp"
#include "fejerlab/piecewise.hpp"
#include "fejerlab/sampled.hpp"

namespace fejerlab {

/// Finite window of Fourier coefficients f^(k), |k| <= K.
class FourierCoefficients {
 public:
  FourierCoefficients() = default;
  explicit FourierCoefficients(int window);
  FourierCoefficients(int window, std::vector<complex> coeffs);

  /// Single exponential c * e^{ik theta}.
  static FourierCoefficients monomial(int k, complex c = 1.0);

  /// Analytic polynomial sum_{k=0}^{n} alpha_k t^k.
  static FourierCoefficients analytic(std::span<const complex> alpha);

  [[nodiscard]] int window() const noexcept { return window_; }
  [[nodiscard]] complex at(int k) const;
  void set(int k, complex value);

  /// Coefficients ordered k = -K..K.
  [[nodiscard]] std::span<const complex> coeffs() const noexcept { return coeffs_; }

  /// Same coefficients in a window of size `window` (zero padded or truncated).
  [[nodiscard]] FourierCoefficients rewindowed(int window) const;

  /// True when coeffs(-k) = conj(coeffs(k)) up to tol for every k, i.e. the
  /// synthesized function is real.
  [[nodiscard]] bool is_conjugate_symmetric(double tol) const;

  /// Fourier coefficients of the pointwise product (discrete convolution of
  /// the coefficient sequences); the window of the result is K_f + K_g.
  [[nodiscard]] FourierCoefficients product(const FourierCoefficients& other) const;

  /// sum_k |f^(k)|^2.
  [[nodiscard]] double energy() const;

 private:
  int window_ = 0;
  std::vector<complex> coeffs_{complex{}};
};

/// Exact f^(k) of a step function.
complex fourier_coeff(const PiecewiseConstant& f, int k);

/// Midpoint-rule f^(k) of a sampled function. Throws AliasingRisk when
/// |k| > size() / 4.
complex fourier_coeff(const SampledFunction& f, int k);

/// Exact f^(k) of the step function that equals samples[i] on cell i. Subject
/// to the same window restriction as the midpoint rule.
complex cell_fourier_coeff(const SampledFunction& f, int k);

FourierCoefficients fourier_coefficients(const PiecewiseConstant& f, int window);
FourierCoefficients fourier_coefficients(const SampledFunction& f, int window);
FourierCoefficients cell_fourier_coefficients(const SampledFunction& f, int window);

/// Largest window a sampled function on this grid may be asked for.
int fourier_window_limit(const CircleGrid& grid) noexcept;

/// Coefficients of f * F_n: f^(k) (1 - |k|/(n+1)) for |k| <= n. Throws
/// InvalidArgument when n > f.window() or n < 0.
FourierCoefficients fejer_mean(const FourierCoefficients& f, int n);

/// sum_k c_k e^{ik theta}.
complex synthesize(const FourierCoefficients& f, double theta);

/// Values at every node of the grid.
SampledFunction synthesize_at_nodes(const FourierCoefficients& f, GridPtr grid);

/// Exact cell averages of the trigonometric polynomial over every cell.
SampledFunction synthesize_cell_averages(const FourierCoefficients& f, GridPtr grid);

/// Harmonic extension into the disk, sum_k f^(k) r^{|k|} e^{ik theta}.
/// Throws InvalidArgument unless 0 <= r < 1.
complex poisson_extend(const FourierCoefficients& f, double r, double theta);

}  // namespace fejerlab
