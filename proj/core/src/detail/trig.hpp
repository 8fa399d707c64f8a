#pragma once

#include <cmath>
#include <complex>

namespace fejerlab::detail {

/// e^{i k x} for k = k0, k0+1, ... by complex rotation, reseeded from libm
/// every kReseed steps so the phase error stays at a few ulps.
class PhaseSequence {
 public:
  static constexpr int kReseed = 32;

  PhaseSequence(double x, int k0 = 0) : x_(x), k_(k0), step_(std::cos(x), std::sin(x)) {
    seed();
  }

  [[nodiscard]] std::complex<double> value() const noexcept { return z_; }
  [[nodiscard]] double cos() const noexcept { return z_.real(); }
  [[nodiscard]] double sin() const noexcept { return z_.imag(); }

  void advance() {
    ++k_;
    if (++since_seed_ == kReseed) {
      seed();
    } else {
      z_ *= step_;
    }
  }

 private:
  void seed() {
    const double a = static_cast<double>(k_) * x_;
    z_ = {std::cos(a), std::sin(a)};
    since_seed_ = 0;
  }

  double x_;
  int k_;
  std::complex<double> step_;
  std::complex<double> z_;
  int since_seed_ = 0;
};

/// sin(t)/t with the removable singularity filled in.
inline double sinc(double t) noexcept {
  if (std::abs(t) < 1e-4) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

}  // namespace fejerlab::detail
