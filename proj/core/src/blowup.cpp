#include "fejerlab/blowup.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "fejerlab/error.hpp"
#include "fejerlab/kernel.hpp"
#include "fejerlab/operator.hpp"

namespace fejerlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfThreshold = 1.0 / 3.0;
constexpr double kTrimmedThreshold = 1.0 / 4.0;

// Running primitive of F_n at a fixed x as n grows:
// G_n(x) = x + 2 S1_n - 2 S2_n / (n + 1), S1_n = sum sin(kx)/k, S2_n = sum sin(kx).
class FejerPrimitive {
 public:
  explicit FejerPrimitive(double x) : x_(x) {}
  void step() {
    ++n_;
    const double s = std::sin(n_ * x_);
    s1_ += s / n_;
    s2_ += s;
  }
  [[nodiscard]] double value() const { return x_ + 2.0 * s1_ - 2.0 * s2_ / (n_ + 1.0); }

 private:
  double x_;
  int n_ = 0;
  double s1_ = 0.0;
  double s2_ = 0.0;
};

// Composite 20-point Gauss-Legendre over panels short against the period of F_n.
double fejer_mass_quadrature(int n, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  const int panels = std::max(8, static_cast<int>(std::ceil(4.0 * (hi - lo) * (n + 1) / kPi)));
  const double step = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * step;
    total += boost::math::quadrature::gauss<double, 20>::integrate(
        [n](double t) { return fejer_kernel_eval(n, t); }, a, a + step);
  }
  return total;
}

void check_resolution(int m, const CircleGrid& grid) {
  constexpr int kMinCells = 4;
  const double a = kPi / (4.0 * m * m);
  const double edge = kPi / (2.0 * m);
  const auto bp = grid.breakpoints();
  const auto first = std::lower_bound(bp.begin(), bp.end(), edge - a);
  const auto last = std::upper_bound(bp.begin(), bp.end(), edge * (1.0 + 1e-14));
  const long cells = std::max<long>(0, static_cast<long>(last - first) - 1);
  if (cells < kMinCells)
    throw GridTooCoarse("grid does not resolve pi/(2m)^2 for m = " + std::to_string(m) + ": " +
                        std::to_string(cells) + " cells inside the window, need " +
                        std::to_string(kMinCells));
}

}  // namespace

double fejer_mass(int n, double lo, double hi) {
  if (n < 0) throw InvalidArgument("fejer_mass: n must be >= 0");
  const auto K = Kernel::fejer(n);
  return K.antiderivative(hi) - K.antiderivative(lo);
}

LocalizationParams localization_params(int m, int n_max, const CircleGrid& grid) {
  if (m < 1) throw InvalidArgument("localization_params: m must be >= 1");
  if (n_max < 1) throw InvalidArgument("localization_params: n_max must be >= 1");
  const double a = kPi / (4.0 * m * m);
  const double edge = kPi / (2.0 * m);

  // G_n is odd, so int_{-a}^0 F_n = G_n(a).
  FejerPrimitive prim(a);
  int n = 0;
  for (int k = 1; k <= n_max; ++k) {
    prim.step();
    if (prim.value() >= kHalfThreshold) {
      n = k;
      break;
    }
  }
  if (n == 0)
    throw NoQualifyingN("no n <= " + std::to_string(n_max) + " gives mass 1/3 for m = " +
                        std::to_string(m));

  const auto K = Kernel::fejer(n);
  const double half = K.antiderivative(a);
  LocalizationParams p;
  p.m = m;
  p.n_of_m = n;
  p.half_mass = half;

  // Breakpoints increase, so the first qualifying one gives the largest delta.
  const auto bp = grid.breakpoints();
  auto it = std::upper_bound(bp.begin(), bp.end(), edge - a);
  for (; it != bp.end() && *it < edge; ++it) {
    const double delta = edge - *it;
    if (delta <= 0.0) break;
    const double trimmed = half - K.antiderivative(delta);
    if (trimmed >= kTrimmedThreshold) {
      p.delta_n = delta;
      p.trimmed_mass = trimmed;
      break;
    }
  }
  if (p.delta_n == 0.0)
    throw GridTooCoarse("no grid breakpoint in (pi/(2m) - pi/(2m)^2, pi/(2m)) qualifies as "
                        "delta_n for m = " + std::to_string(m));

  p.half_mass_quadrature = fejer_mass_quadrature(n, -a, 0.0);
  p.trimmed_mass_quadrature = fejer_mass_quadrature(n, -a, -p.delta_n);
  if (p.half_mass_quadrature < kHalfThreshold || p.trimmed_mass_quadrature < kTrimmedThreshold)
    throw NoQualifyingN("quadrature does not certify the localization masses for m = " +
                        std::to_string(m));
  return p;
}

std::vector<BlowupRow> fejer_blowup(std::span<const int> m_list, const Weight& w, GridPtr grid,
                                    const BlowupOptions& options) {
  if (!grid) throw InvalidArgument("fejer_blowup: null grid");
  if (grid->order() < w.order())
    throw GridTooCoarse("fejer_blowup: grid order is below the weight order");
  std::vector<BlowupRow> rows;
  for (int m : m_list) {
    if (m < 1 || m > w.order())
      throw InvalidArgument("fejer_blowup: m = " + std::to_string(m) +
                            " is outside 1..M of the weight");
    check_resolution(m, *grid);
    const auto params = localization_params(m, options.n_max, *grid);
    const auto K = Kernel::fejer(params.n_of_m);

    BlowupRow row;
    row.m = m;
    row.n_m = params.n_of_m;
    row.delta_n = params.delta_n;
    row.bound = std::sqrt(static_cast<double>(m)) / (8.0 * kPi);

    // (C v_m)(t) = sqrt(m)/(2 pi) [G(t - pi/(2m)) - G(t - pi/(2m-1))].
    const double lo = kPi / (2.0 * m), hi = kPi / (2.0 * m - 1.0);
    const double scale = std::sqrt(static_cast<double>(m)) / (2.0 * kPi);
    double minimum = HUGE_VAL;
    const auto nodes = grid->nodes();
    for (double t : nodes) {
      if (t < lo - params.delta_n || t > lo) continue;
      minimum = std::min(minimum, scale * (K.antiderivative(t - lo) - K.antiderivative(t - hi)));
    }
    row.pointwise_min = minimum;

    row.norm_linfw = operator_norm_streamed(K, grid, w, SpaceTag::WeightedLinf).value;
    row.norm_l1w = options.assemble
                       ? operator_norm(assemble_operator(K, grid), w, SpaceTag::WeightedL1).value
                       : operator_norm_streamed(K, grid, w, SpaceTag::WeightedL1).value;
    row.upper_bound_l1w = K.sup_norm() * w.l1_norm();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fejerlab
