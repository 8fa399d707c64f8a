#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fejerlab/piecewise.hpp"
#include "fejerlab/sampled.hpp"

namespace fejerlab {

/// Convolution kernel K on the circle: Fejer F_n, Poisson P(r, .) or a
/// user-supplied real step function.
///
/// Fejer and Poisson kernels are cosine series K = a_0 + 2 sum_{k>=1} a_k
/// cos(k theta); every integral the library needs is evaluated term by term
/// in closed form. The Poisson series is truncated once r^k < 1e-18.
class Kernel {
 public:
  enum class Kind { Fejer, Poisson, Custom };

  static Kernel fejer(int n);
  static Kernel poisson(double r);
  static Kernel custom(PiecewiseConstant profile);
  /// Step kernel equal to samples[i] on cell i of the sample's grid.
  static Kernel custom(const SampledFunction& samples);

  [[nodiscard]] Kind kind() const noexcept;
  [[nodiscard]] std::string name() const;

  /// Fejer order n, or -1.
  [[nodiscard]] int fejer_order() const noexcept;
  /// Poisson radius r, or -1.
  [[nodiscard]] double poisson_radius() const noexcept;

  [[nodiscard]] double operator()(double theta) const;

  /// Mean of K over the normalized measure (= K^(0)).
  [[nodiscard]] double mean() const;

  /// K^(k).
  [[nodiscard]] double fourier_coefficient(int k) const;

  /// Cosine-series coefficients a_0..a_n; empty for custom kernels.
  [[nodiscard]] std::span<const double> series() const noexcept;
  [[nodiscard]] bool is_series() const noexcept { return !series_.empty(); }

  /// Primitive G with G(0) = 0 and G' = K.
  [[nodiscard]] double antiderivative(double x) const;

  /// Exact value of int_a^b int_c^d K(theta - phi) dphi dtheta.
  [[nodiscard]] double cell_pair_integral(double a, double b, double c, double d) const;

  [[nodiscard]] bool is_even(double tol = 1e-14) const;
  [[nodiscard]] bool is_nonnegative() const;
  [[nodiscard]] bool is_finite() const;
  [[nodiscard]] double sup_norm() const;

  /// Step profile of a custom kernel; empty function otherwise.
  [[nodiscard]] const PiecewiseConstant& profile() const noexcept { return profile_; }

 private:
  Kernel() = default;

  Kind kind_ = Kind::Fejer;
  int fejer_n_ = -1;
  double poisson_r_ = -1.0;
  std::vector<double> series_;
  PiecewiseConstant profile_;
  std::vector<double> profile_real_;
  double custom_mean_ = 0.0;
};

/// Closed-form F_n(theta) = (1/(n+1)) (sin((n+1)theta/2) / sin(theta/2))^2,
/// with the value n+1 at theta = 0 mod 2pi.
double fejer_kernel_eval(int n, double theta);

/// Coefficient-sum form sum_{|k|<=n} (1 - |k|/(n+1)) e^{ik theta}.
double fejer_kernel_sum(int n, double theta);

/// P(r, theta) = (1 - r^2) / (1 - 2 r cos theta + r^2).
double poisson_kernel_eval(double r, double theta);

}  // namespace fejerlab
