#include "fejerlab/piecewise.hpp"

#include <cmath>
#include <numbers>

#include "fejerlab/error.hpp"
#include "fejerlab/grid.hpp"

namespace fejerlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

PiecewiseConstant::PiecewiseConstant(std::vector<double> breakpoints,
                                     std::vector<complex> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size() + 1 || values_.empty())
    throw InvalidArgument("PiecewiseConstant: need one more breakpoint than values");
  if (breakpoints_.front() != -kPi || breakpoints_.back() != kPi)
    throw InvalidArgument("PiecewiseConstant: breakpoints must span [-pi, pi]");
  for (std::size_t j = 0; j + 1 < breakpoints_.size(); ++j)
    if (!(breakpoints_[j] < breakpoints_[j + 1]))
      throw InvalidArgument("PiecewiseConstant: breakpoints must be strictly increasing");
}

PiecewiseConstant PiecewiseConstant::from_real(std::vector<double> breakpoints,
                                               std::span<const double> values) {
  return {std::move(breakpoints), std::vector<complex>(values.begin(), values.end())};
}

PiecewiseConstant PiecewiseConstant::constant(complex c) {
  return {{-kPi, kPi}, {c}};
}

PiecewiseConstant PiecewiseConstant::arc_indicator(double lo, double hi, complex height) {
  if (!(lo >= -kPi && lo < hi && hi <= kPi))
    throw InvalidArgument("arc_indicator: need -pi <= lo < hi <= pi");
  std::vector<double> bp{-kPi};
  std::vector<complex> vals;
  if (lo > -kPi) {
    bp.push_back(lo);
    vals.push_back(0.0);
  }
  vals.push_back(height);
  if (hi < kPi) {
    bp.push_back(hi);
    vals.push_back(0.0);
  }
  bp.push_back(kPi);
  return {std::move(bp), std::move(vals)};
}

complex PiecewiseConstant::operator()(double theta) const {
  theta = wrap_angle(theta);
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), theta);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  idx = (idx == 0) ? 0 : std::min(idx - 1, values_.size() - 1);
  return values_[idx];
}

PiecewiseConstant PiecewiseConstant::abs() const {
  std::vector<complex> v(values_.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = std::abs(values_[j]);
  return {breakpoints_, std::move(v)};
}

PiecewiseConstant PiecewiseConstant::scaled(complex a) const {
  std::vector<complex> v(values_);
  for (auto& x : v) x *= a;
  return {breakpoints_, std::move(v)};
}

PiecewiseConstant PiecewiseConstant::plus(const PiecewiseConstant& other) const {
  std::vector<double> bp{-kPi};
  std::vector<complex> v;
  for_each_overlap(*this, other, [&](double, double hi, complex a, complex b) {
    bp.push_back(hi);
    v.push_back(a + b);
  });
  bp.back() = kPi;
  return {std::move(bp), std::move(v)};
}

complex PiecewiseConstant::mean() const {
  complex s{};
  for (std::size_t j = 0; j < values_.size(); ++j) s += values_[j] * length(j);
  return s / (2.0 * kPi);
}

bool PiecewiseConstant::is_real() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](complex v) { return v.imag() == 0.0; });
}

bool PiecewiseConstant::is_even(double tol) const {
  const std::size_t n = breakpoints_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(breakpoints_[i] + breakpoints_[n - 1 - i]) > tol) return false;
  const std::size_t p = values_.size();
  for (std::size_t j = 0; j < p; ++j)
    if (std::abs(values_[j] - values_[p - 1 - j]) > tol) return false;
  return true;
}

}  // namespace fejerlab
