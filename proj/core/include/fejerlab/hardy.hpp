#pragma once

#include <vector>

#include "fejerlab/fourier.hpp"

namespace fejerlab {

struct HardyReport {
  bool hardy = false;
  double max_negative = 0.0;      ///< max_{k<0} |f^(k)|
  std::vector<int> violations;    ///< negative indices exceeding tol

  explicit operator bool() const noexcept { return hardy; }
};

/// Membership in H: every negative-index coefficient is at most tol.
HardyReport is_hardy(const FourierCoefficients& f, double tol);

/// Harmonic extension of a Hardy-class window sampled on the circle of radius r.
struct DiskExtension {
  FourierCoefficients source;
  double radius = 0.0;
  std::vector<complex> taylor;    ///< a_n, n = 0..K, recovered from the extension
};

/// Recovers the Taylor coefficients of theta -> F(r e^{i theta}) by an exact
/// discrete Fourier transform on 4(K+1) equispaced angles.
DiskExtension disk_extension(const FourierCoefficients& f, double r);

/// max_n |a_n - f^(n) r^n| over n = 0..K. Throws InvalidArgument when f is
/// not Hardy class (tol 1e-12) or r is outside (0, 1).
double taylor_fourier_check(const FourierCoefficients& f, double r);

struct ProductReport {
  bool ok = false;
  double max_negative = 0.0;  ///< max_{k<0} |(fg)^(k)|
  double zero_mismatch = 0.0; ///< |(fg)^(0) - f^(0) g^(0)|
  FourierCoefficients product;
};

/// Product of two Hardy-class windows: negative coefficients vanish and the
/// mean is the product of the means. Throws InvalidArgument on non-Hardy input.
ProductReport product_hardy_check(const FourierCoefficients& f,
                                  const FourierCoefficients& g, double tol);

}  // namespace fejerlab
