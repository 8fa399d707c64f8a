#include "fejerlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fejerlab/error.hpp"

namespace fejerlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Cosine-graded interior points of [lo, hi] split into `cells` cells.
void append_graded(std::vector<double>& out, double lo, double hi, int cells) {
  const double len = hi - lo;
  for (int k = 1; k < cells; ++k) {
    const double s = 0.5 * (1.0 - std::cos(kPi * k / cells));
    out.push_back(lo + len * s);
  }
}

}  // namespace

double wrap_angle(double theta) noexcept {
  if (theta > -kPi && theta <= kPi) return theta;
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

std::shared_ptr<const CircleGrid> CircleGrid::make(int M, int points_per_interval,
                                                   double max_cell) {
  if (M < 1) throw InvalidArgument("make_grid: M must be >= 1");
  if (points_per_interval < 2)
    throw InvalidArgument("make_grid: points_per_interval must be >= 2");
  if (!(max_cell >= 0.0) || !std::isfinite(max_cell))
    throw InvalidArgument("make_grid: max_cell must be finite and >= 0");

  auto grid = std::shared_ptr<CircleGrid>(new CircleGrid());
  grid->order_ = M;
  grid->ppi_ = points_per_interval;

  // Positive anchors 0 < pi/(2M+1) < ... < pi/2 < pi.
  std::vector<double> pos{0.0};
  for (int k = 2 * M + 1; k >= 1; --k) pos.push_back(kPi / k);

  // Half grid on [0, pi], mirrored so that the result is exactly symmetric.
  std::vector<double> half{0.0};
  for (std::size_t a = 0; a + 1 < pos.size(); ++a) {
    const double lo = pos[a], hi = pos[a + 1];
    int cells = (a == 0) ? 2 * points_per_interval : points_per_interval;
    if (max_cell > 0.0) {
      // The largest cosine-graded cell is len * sin(pi / (2 cells)).
      while ((hi - lo) * std::sin(kPi / (2.0 * cells)) > max_cell) cells += 1;
    }
    append_graded(half, lo, hi, cells);
    half.push_back(hi);
  }

  auto& bp = grid->breakpoints_;
  bp.reserve(2 * half.size() - 1);
  for (auto it = half.rbegin(); it != half.rend(); ++it)
    if (*it != 0.0) bp.push_back(-*it);
  bp.insert(bp.end(), half.begin(), half.end());

  for (auto it = pos.rbegin(); it != pos.rend(); ++it)
    if (*it != 0.0) grid->anchors_.push_back(-*it);
  grid->anchors_.insert(grid->anchors_.end(), pos.begin(), pos.end());

  const std::size_t n = bp.size() - 1;
  grid->nodes_.resize(n);
  grid->widths_.resize(n);
  grid->quad_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid->nodes_[i] = 0.5 * (bp[i] + bp[i + 1]);
    grid->widths_[i] = bp[i + 1] - bp[i];
    grid->quad_[i] = grid->widths_[i] / (2.0 * kPi);
  }
  return grid;
}

std::size_t CircleGrid::locate(double theta) const {
  theta = wrap_angle(theta);
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), theta);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, size() - 1);
}

std::size_t CircleGrid::find_breakpoint(double angle, double tol) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), angle - tol);
  if (it != breakpoints_.end() && std::abs(*it - angle) <= tol)
    return static_cast<std::size_t>(it - breakpoints_.begin());
  return size() + 1;
}

double CircleGrid::max_width_in(double lo, double hi) const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    if (breakpoints_[i + 1] > lo && breakpoints_[i] < hi) best = std::max(best, widths_[i]);
  return best;
}

double CircleGrid::min_width() const { return *std::min_element(widths_.begin(), widths_.end()); }
double CircleGrid::max_width() const { return *std::max_element(widths_.begin(), widths_.end()); }

bool CircleGrid::is_symmetric() const {
  const std::size_t n = breakpoints_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (breakpoints_[i] != -breakpoints_[n - 1 - i]) return false;
  return true;
}

}  // namespace fejerlab
