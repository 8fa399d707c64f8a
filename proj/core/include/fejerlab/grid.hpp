#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace fejerlab {

/// Composite partition of [-pi, pi] aligned to the angles +-pi/k, k = 1..2M+1,
/// plus the origin. Every interval between two consecutive anchors is split
/// into cells with cosine grading, so cells shrink towards each anchor.
///
/// Nodes are the cell midpoints; quadrature weights are cell lengths / 2pi,
/// i.e. the normalized measure dm = |dt| / 2pi.
class CircleGrid {
 public:
  /// Builds a grid for weight truncation order `M`.
  ///
  /// Each anchor interval receives at least `points_per_interval` cells (the
  /// two intervals adjacent to the origin receive twice as many). When
  /// `max_cell > 0` intervals are further subdivided so that no cell is
  /// longer than `max_cell` radians.
  static std::shared_ptr<const CircleGrid> make(int M, int points_per_interval,
                                                double max_cell = 0.0);

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] int points_per_interval() const noexcept { return ppi_; }

  /// size() + 1 cell boundaries, from -pi to pi.
  [[nodiscard]] std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::span<const double> widths() const noexcept { return widths_; }
  [[nodiscard]] std::span<const double> quad_weights() const noexcept { return quad_; }

  /// The anchor angles (+-pi/k and 0) the grid is aligned to.
  [[nodiscard]] std::span<const double> anchors() const noexcept { return anchors_; }

  /// Index of the cell containing theta (reduced to (-pi, pi]); cells are
  /// treated as left-closed, theta = pi maps to the last cell.
  [[nodiscard]] std::size_t locate(double theta) const;

  /// Index of the breakpoint equal to `angle` up to `tol`, or size() + 1.
  [[nodiscard]] std::size_t find_breakpoint(double angle, double tol = 1e-13) const;

  /// Largest cell length among cells intersecting [lo, hi].
  [[nodiscard]] double max_width_in(double lo, double hi) const;

  [[nodiscard]] double min_width() const;
  [[nodiscard]] double max_width() const;

  /// True when the breakpoints are exactly symmetric under theta -> -theta.
  [[nodiscard]] bool is_symmetric() const;

 private:
  CircleGrid() = default;

  int order_ = 0;
  int ppi_ = 0;
  std::vector<double> anchors_;
  std::vector<double> breakpoints_;
  std::vector<double> nodes_;
  std::vector<double> widths_;
  std::vector<double> quad_;
};

using GridPtr = std::shared_ptr<const CircleGrid>;

/// Convenience wrapper matching the library's free-function style.
inline GridPtr make_grid(int M, int points_per_interval, double max_cell = 0.0) {
  return CircleGrid::make(M, points_per_interval, max_cell);
}

/// Reduces an angle to (-pi, pi].
double wrap_angle(double theta) noexcept;

}  // namespace fejerlab
