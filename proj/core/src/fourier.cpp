#include "fejerlab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "detail/trig.hpp"
#include "fejerlab/error.hpp"

namespace fejerlab {

namespace {

constexpr double kPi = std::numbers::pi;

// (1/2pi) int_a^b e^{-ik theta} d theta without cancellation for short intervals.
complex interval_coefficient(double a, double b, int k) {
  const double h = b - a;
  const double mid = 0.5 * (a + b);
  const double kd = static_cast<double>(k);
  return std::polar(h / (2.0 * kPi) * detail::sinc(0.5 * kd * h), -kd * mid);
}

void check_window(const SampledFunction& f, int k) {
  const int limit = fourier_window_limit(f.grid());
  if (std::abs(k) > limit)
    throw AliasingRisk("fourier_coeff: |k| = " + std::to_string(std::abs(k)) +
                       " exceeds the window limit " + std::to_string(limit));
}

}  // namespace

FourierCoefficients::FourierCoefficients(int window)
    : window_(window) {
  if (window < 0) throw InvalidArgument("FourierCoefficients: negative window");
  coeffs_.assign(2 * static_cast<std::size_t>(window) + 1, complex{});
}

FourierCoefficients::FourierCoefficients(int window, std::vector<complex> coeffs)
    : window_(window), coeffs_(std::move(coeffs)) {
  if (window < 0 || coeffs_.size() != 2 * static_cast<std::size_t>(window) + 1)
    throw InvalidArgument("FourierCoefficients: need 2K+1 coefficients");
}

FourierCoefficients FourierCoefficients::monomial(int k, complex c) {
  FourierCoefficients f(std::abs(k));
  f.set(k, c);
  return f;
}

FourierCoefficients FourierCoefficients::analytic(std::span<const complex> alpha) {
  if (alpha.empty()) return FourierCoefficients(0);
  FourierCoefficients f(static_cast<int>(alpha.size()) - 1);
  for (std::size_t k = 0; k < alpha.size(); ++k) f.set(static_cast<int>(k), alpha[k]);
  return f;
}

complex FourierCoefficients::at(int k) const {
  if (std::abs(k) > window_) return {};
  return coeffs_[static_cast<std::size_t>(k + window_)];
}

void FourierCoefficients::set(int k, complex value) {
  if (std::abs(k) > window_) throw InvalidArgument("FourierCoefficients::set: outside window");
  coeffs_[static_cast<std::size_t>(k + window_)] = value;
}

FourierCoefficients FourierCoefficients::rewindowed(int window) const {
  FourierCoefficients out(window);
  const int K = std::min(window, window_);
  for (int k = -K; k <= K; ++k) out.set(k, at(k));
  return out;
}

bool FourierCoefficients::is_conjugate_symmetric(double tol) const {
  for (int k = 0; k <= window_; ++k)
    if (std::abs(at(-k) - std::conj(at(k))) > tol) return false;
  return true;
}

FourierCoefficients FourierCoefficients::product(const FourierCoefficients& other) const {
  FourierCoefficients out(window_ + other.window_);
  for (int j = -window_; j <= window_; ++j) {
    const complex a = at(j);
    if (a == complex{}) continue;
    for (int l = -other.window_; l <= other.window_; ++l)
      out.coeffs_[static_cast<std::size_t>(j + l + out.window_)] += a * other.at(l);
  }
  return out;
}

double FourierCoefficients::energy() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

int fourier_window_limit(const CircleGrid& grid) noexcept {
  return static_cast<int>(grid.size() / 4);
}

complex fourier_coeff(const PiecewiseConstant& f, int k) {
  complex s{};
  for (std::size_t j = 0; j < f.pieces(); ++j)
    s += f.values()[j] * interval_coefficient(f.left(j), f.right(j), k);
  return s;
}

complex fourier_coeff(const SampledFunction& f, int k) {
  check_window(f, k);
  const auto nodes = f.grid().nodes();
  const auto q = f.grid().quad_weights();
  complex s{};
  for (std::size_t i = 0; i < f.size(); ++i)
    s += f[i] * q[i] * std::polar(1.0, -static_cast<double>(k) * nodes[i]);
  return s;
}

complex cell_fourier_coeff(const SampledFunction& f, int k) {
  check_window(f, k);
  const auto bp = f.grid().breakpoints();
  complex s{};
  for (std::size_t i = 0; i < f.size(); ++i)
    s += f[i] * interval_coefficient(bp[i], bp[i + 1], k);
  return s;
}

namespace {

// Coefficients of a sum of interval contributions, computed with one phase
// recurrence per interval instead of one libm call per (interval, k).
template <typename IntervalFn>
FourierCoefficients accumulate_intervals(std::size_t count, int window, IntervalFn&& interval) {
  FourierCoefficients out(window);
  std::vector<complex> acc(2 * static_cast<std::size_t>(window) + 1);
  for (std::size_t j = 0; j < count; ++j) {
    const auto [a, b, value] = interval(j);
    if (value == complex{}) continue;
    const double h = b - a;
    const double mid = 0.5 * (a + b);
    const complex scale = value * (h / (2.0 * kPi));
    detail::PhaseSequence phase(-mid);
    for (int k = 0; k <= window; ++k) {
      const double s = detail::sinc(0.5 * k * h);
      const complex e = phase.value();
      acc[static_cast<std::size_t>(window + k)] += scale * s * e;
      if (k > 0) acc[static_cast<std::size_t>(window - k)] += scale * s * std::conj(e);
      phase.advance();
    }
  }
  for (int k = -window; k <= window; ++k) out.set(k, acc[static_cast<std::size_t>(k + window)]);
  return out;
}

struct Interval {
  double a, b;
  complex value;
};

}  // namespace

FourierCoefficients fourier_coefficients(const PiecewiseConstant& f, int window) {
  if (window < 0) throw InvalidArgument("fourier_coefficients: negative window");
  return accumulate_intervals(f.pieces(), window, [&](std::size_t j) {
    return Interval{f.left(j), f.right(j), f.values()[j]};
  });
}

FourierCoefficients fourier_coefficients(const SampledFunction& f, int window) {
  if (window < 0) throw InvalidArgument("fourier_coefficients: negative window");
  check_window(f, window);
  const auto nodes = f.grid().nodes();
  const auto q = f.grid().quad_weights();
  std::vector<complex> acc(2 * static_cast<std::size_t>(window) + 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == complex{}) continue;
    const complex scale = f[i] * q[i];
    detail::PhaseSequence phase(-nodes[i]);
    for (int k = 0; k <= window; ++k) {
      const complex e = phase.value();
      acc[static_cast<std::size_t>(window + k)] += scale * e;
      if (k > 0) acc[static_cast<std::size_t>(window - k)] += scale * std::conj(e);
      phase.advance();
    }
  }
  return {window, std::move(acc)};
}

FourierCoefficients cell_fourier_coefficients(const SampledFunction& f, int window) {
  if (window < 0) throw InvalidArgument("cell_fourier_coefficients: negative window");
  check_window(f, window);
  const auto bp = f.grid().breakpoints();
  return accumulate_intervals(f.size(), window, [&](std::size_t i) {
    return Interval{bp[i], bp[i + 1], f[i]};
  });
}

FourierCoefficients fejer_mean(const FourierCoefficients& f, int n) {
  if (n < 0) throw InvalidArgument("fejer_mean: n must be >= 0");
  if (n > f.window())
    throw InvalidArgument("fejer_mean: coefficient window " + std::to_string(f.window()) +
                          " is smaller than n = " + std::to_string(n));
  FourierCoefficients out(n);
  for (int k = -n; k <= n; ++k)
    out.set(k, f.at(k) * (1.0 - static_cast<double>(std::abs(k)) / (n + 1)));
  return out;
}

complex synthesize(const FourierCoefficients& f, double theta) {
  complex s{};
  const int K = f.window();
  detail::PhaseSequence phase(theta);
  for (int k = 0; k <= K; ++k) {
    const complex e = phase.value();
    s += f.at(k) * e;
    if (k > 0) s += f.at(-k) * std::conj(e);
    phase.advance();
  }
  return s;
}

SampledFunction synthesize_at_nodes(const FourierCoefficients& f, GridPtr grid) {
  std::vector<complex> v(grid->size());
  const auto nodes = grid->nodes();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = synthesize(f, nodes[i]);
  return {std::move(grid), std::move(v)};
}

SampledFunction synthesize_cell_averages(const FourierCoefficients& f, GridPtr grid) {
  std::vector<complex> v(grid->size());
  const auto nodes = grid->nodes();
  const auto widths = grid->widths();
  const int K = f.window();
  for (std::size_t i = 0; i < v.size(); ++i) {
    complex s{};
    detail::PhaseSequence phase(nodes[i]);
    for (int k = 0; k <= K; ++k) {
      const complex e = phase.value() * detail::sinc(0.5 * k * widths[i]);
      s += f.at(k) * e;
      if (k > 0) s += f.at(-k) * std::conj(e);
      phase.advance();
    }
    v[i] = s;
  }
  return {std::move(grid), std::move(v)};
}

complex poisson_extend(const FourierCoefficients& f, double r, double theta) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidArgument("poisson_extend: need 0 <= r < 1");
  complex s = f.at(0);
  double rk = 1.0;
  detail::PhaseSequence phase(theta, 1);
  for (int k = 1; k <= f.window(); ++k) {
    rk *= r;
    const complex e = phase.value();
    s += rk * (f.at(k) * e + f.at(-k) * std::conj(e));
    phase.advance();
  }
  return s;
}

}  // namespace fejerlab
