#pragma once

#include <algorithm>
#include <complex>
#include <span>
#include <vector>

namespace fejerlab {

using complex = std::complex<double>;

/// Step function on the circle. The breakpoints b_0 < b_1 < ... < b_n span
/// exactly [-pi, pi]; interval j is [b_j, b_{j+1}) with value values[j]
/// (the last interval also contains pi).
class PiecewiseConstant {
 public:
  PiecewiseConstant() = default;
  PiecewiseConstant(std::vector<double> breakpoints, std::vector<complex> values);

  /// Builds from real interval values.
  static PiecewiseConstant from_real(std::vector<double> breakpoints,
                                     std::span<const double> values);

  /// Constant function c.
  static PiecewiseConstant constant(complex c);

  /// Indicator of the arc [lo, hi] with -pi <= lo < hi <= pi.
  static PiecewiseConstant arc_indicator(double lo, double hi, complex height = 1.0);

  [[nodiscard]] std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  [[nodiscard]] std::span<const complex> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t pieces() const noexcept { return values_.size(); }

  [[nodiscard]] double left(std::size_t j) const { return breakpoints_[j]; }
  [[nodiscard]] double right(std::size_t j) const { return breakpoints_[j + 1]; }
  [[nodiscard]] double length(std::size_t j) const {
    return breakpoints_[j + 1] - breakpoints_[j];
  }

  /// Value at theta (reduced to (-pi, pi]), left-closed convention.
  [[nodiscard]] complex operator()(double theta) const;

  /// Pointwise modulus, product with a scalar, and sum of two step functions.
  [[nodiscard]] PiecewiseConstant abs() const;
  [[nodiscard]] PiecewiseConstant scaled(complex a) const;
  [[nodiscard]] PiecewiseConstant plus(const PiecewiseConstant& other) const;

  /// Exact integral of f against the normalized measure dm.
  [[nodiscard]] complex mean() const;

  [[nodiscard]] bool is_real() const noexcept;

  /// True when f(theta) = f(-theta) on every interval (breakpoints and values
  /// compared up to `tol`).
  [[nodiscard]] bool is_even(double tol = 1e-14) const;

  /// Visits the common refinement of two step functions, calling
  /// fn(lo, hi, f_value, g_value) for every non-empty interval.
  template <typename Fn>
  static void for_each_overlap(const PiecewiseConstant& f, const PiecewiseConstant& g,
                               Fn&& fn) {
    std::size_t i = 0, j = 0;
    double lo = f.breakpoints_.front();
    while (i < f.pieces() && j < g.pieces()) {
      const double hi = std::min(f.right(i), g.right(j));
      if (hi > lo) fn(lo, hi, f.values_[i], g.values_[j]);
      lo = hi;
      if (f.right(i) <= hi) ++i;
      if (g.right(j) <= hi) ++j;
    }
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<complex> values_;
};

}  // namespace fejerlab
