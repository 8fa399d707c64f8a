#include "fejerlab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "detail/trig.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/fourier.hpp"

namespace fejerlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoissonCutoff = 1e-18;

// Length of [a, b] intersected with [c + x, d + x]: the overlap profile of
// the double integral over two cells after the change of variable x = t - s.
double overlap(double a, double b, double c, double d, double x) {
  return std::max(0.0, std::min(b, d + x) - std::max(a, c + x));
}

}  // namespace

Kernel Kernel::fejer(int n) {
  if (n < 0) throw InvalidArgument("Kernel::fejer: n must be >= 0");
  Kernel k;
  k.kind_ = Kind::Fejer;
  k.fejer_n_ = n;
  k.series_.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) k.series_[static_cast<std::size_t>(j)] = 1.0 - double(j) / (n + 1);
  return k;
}

Kernel Kernel::poisson(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidArgument("Kernel::poisson: need 0 <= r < 1");
  Kernel k;
  k.kind_ = Kind::Poisson;
  k.poisson_r_ = r;
  double rk = 1.0;
  while (rk >= kPoissonCutoff) {
    k.series_.push_back(rk);
    rk *= r;
  }
  return k;
}

Kernel Kernel::custom(PiecewiseConstant profile) {
  if (profile.pieces() == 0) throw InvalidArgument("Kernel::custom: empty profile");
  if (!profile.is_real()) throw InvalidArgument("Kernel::custom: profile must be real");
  Kernel k;
  k.kind_ = Kind::Custom;
  k.profile_real_.reserve(profile.pieces());
  for (const auto& v : profile.values()) k.profile_real_.push_back(v.real());
  k.custom_mean_ = profile.mean().real();
  k.profile_ = std::move(profile);
  return k;
}

Kernel Kernel::custom(const SampledFunction& samples) { return custom(samples.as_piecewise()); }

Kernel::Kind Kernel::kind() const noexcept { return kind_; }

std::string Kernel::name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Fejer: os << "fejer(n=" << fejer_n_ << ")"; break;
    case Kind::Poisson: os << "poisson(r=" << poisson_r_ << ")"; break;
    case Kind::Custom: os << "custom(pieces=" << profile_.pieces() << ")"; break;
  }
  return os.str();
}

int Kernel::fejer_order() const noexcept { return fejer_n_; }
double Kernel::poisson_radius() const noexcept { return poisson_r_; }

double Kernel::operator()(double theta) const {
  switch (kind_) {
    case Kind::Fejer: return fejer_kernel_eval(fejer_n_, theta);
    case Kind::Poisson: return poisson_kernel_eval(poisson_r_, theta);
    case Kind::Custom: return profile_(theta).real();
  }
  return 0.0;
}

double Kernel::mean() const { return is_series() ? series_.front() : custom_mean_; }

double Kernel::fourier_coefficient(int k) const {
  if (is_series()) {
    const auto j = static_cast<std::size_t>(std::abs(k));
    return j < series_.size() ? series_[j] : 0.0;
  }
  return fourier_coeff(profile_, k).real();
}

std::span<const double> Kernel::series() const noexcept { return series_; }

double Kernel::antiderivative(double x) const {
  if (is_series()) {
    double s = series_[0] * x;
    detail::PhaseSequence phase(x, 1);
    for (std::size_t k = 1; k < series_.size(); ++k) {
      s += 2.0 * series_[k] * phase.sin() / static_cast<double>(k);
      phase.advance();
    }
    return s;
  }
  // Primitive from -pi of the periodic extension, shifted so that G(0) = 0.
  const auto bp = profile_.breakpoints();
  const double period_integral = kTwoPi * custom_mean_;
  auto from_minus_pi = [&](double t) {
    const double turns = std::floor((t + kPi) / kTwoPi);
    double u = t - turns * kTwoPi;
    double s = turns * period_integral;
    for (std::size_t j = 0; j < profile_real_.size() && bp[j] < u; ++j)
      s += profile_real_[j] * (std::min(u, bp[j + 1]) - bp[j]);
    return s;
  };
  return from_minus_pi(x) - from_minus_pi(0.0);
}

double Kernel::cell_pair_integral(double a, double b, double c, double d) const {
  if (!(b >= a && d >= c)) throw InvalidArgument("cell_pair_integral: reversed interval");
  const double h1 = b - a, h2 = d - c;
  if (h1 == 0.0 || h2 == 0.0) return 0.0;

  if (is_series()) {
    const double u = 0.5 * (a + b) - 0.5 * (c + d);
    const double alpha = 0.5 * h1, beta = 0.5 * h2;
    detail::PhaseSequence pu(u, 1), pa(alpha, 1), pb(beta, 1);
    double s = series_[0];
    for (std::size_t k = 1; k < series_.size(); ++k) {
      const double kd = static_cast<double>(k);
      // sinc(k alpha) from the recurrence unless k alpha is tiny.
      const double sa = kd * alpha < 1e-4 ? detail::sinc(kd * alpha) : pa.sin() / (kd * alpha);
      const double sb = kd * beta < 1e-4 ? detail::sinc(kd * beta) : pb.sin() / (kd * beta);
      s += 2.0 * series_[k] * pu.cos() * sa * sb;
      pu.advance();
      pa.advance();
      pb.advance();
    }
    return h1 * h2 * s;
  }

  // int K(x) T(x) dx over x in [a - d, b - c]; T is the trapezoid overlap
  // profile, linear between its knots, and K is extended periodically.
  const double xlo = a - d, xhi = b - c;
  const double k1 = std::min(a - c, b - d), k2 = std::max(a - c, b - d);
  const auto bp = profile_.breakpoints();
  double total = 0.0;
  for (int shift = -1; shift <= 1; ++shift) {
    const double off = shift * kTwoPi;
    const double lo = std::max(xlo, bp.front() + off), hi = std::min(xhi, bp.back() + off);
    if (!(hi > lo)) continue;
    auto it = std::upper_bound(bp.begin(), bp.end(), lo - off);
    std::size_t j = it == bp.begin() ? 0 : static_cast<std::size_t>(it - bp.begin()) - 1;
    for (; j < profile_real_.size() && bp[j] + off < hi; ++j) {
      const double p = std::max(lo, bp[j] + off), q = std::min(hi, bp[j + 1] + off);
      if (!(q > p) || profile_real_[j] == 0.0) continue;
      double pts[4] = {p, k1, k2, q};
      std::size_t count = 1;
      for (double kn : {k1, k2})
        if (kn > p && kn < q) pts[count++] = kn;
      pts[count++] = q;
      double piece = 0.0;
      for (std::size_t t = 0; t + 1 < count; ++t)
        piece += 0.5 * (overlap(a, b, c, d, pts[t]) + overlap(a, b, c, d, pts[t + 1])) *
                 (pts[t + 1] - pts[t]);
      total += profile_real_[j] * piece;
    }
  }
  return total;
}

bool Kernel::is_even(double tol) const {
  return is_series() ? true : profile_.is_even(tol);
}

bool Kernel::is_nonnegative() const {
  if (is_series()) return true;
  return std::all_of(profile_real_.begin(), profile_real_.end(), [](double v) { return v >= 0.0; });
}

bool Kernel::is_finite() const {
  if (is_series()) return true;
  return std::all_of(profile_real_.begin(), profile_real_.end(),
                     [](double v) { return std::isfinite(v); });
}

double Kernel::sup_norm() const {
  switch (kind_) {
    case Kind::Fejer: return fejer_n_ + 1.0;
    case Kind::Poisson: return (1.0 + poisson_r_) / (1.0 - poisson_r_);
    case Kind::Custom: {
      double m = 0.0;
      for (double v : profile_real_) m = std::max(m, std::abs(v));
      return m;
    }
  }
  return 0.0;
}

double fejer_kernel_eval(int n, double theta) {
  if (n < 0) throw InvalidArgument("fejer_kernel_eval: n must be >= 0");
  const double t = wrap_angle(theta);
  const double s = std::sin(0.5 * t);
  if (s == 0.0) return n + 1.0;
  const double q = std::sin(0.5 * (n + 1.0) * t) / s;
  return q * q / (n + 1.0);
}

double fejer_kernel_sum(int n, double theta) {
  if (n < 0) throw InvalidArgument("fejer_kernel_sum: n must be >= 0");
  double s = 1.0;
  detail::PhaseSequence phase(wrap_angle(theta), 1);
  for (int k = 1; k <= n; ++k) {
    s += 2.0 * (1.0 - double(k) / (n + 1)) * phase.cos();
    phase.advance();
  }
  return s;
}

double poisson_kernel_eval(double r, double theta) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidArgument("poisson_kernel_eval: need 0 <= r < 1");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

}  // namespace fejerlab
