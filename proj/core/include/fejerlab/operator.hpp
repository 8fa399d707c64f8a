#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fejerlab/grid.hpp"
#include "fejerlab/kernel.hpp"
#include "fejerlab/sampled.hpp"
#include "fejerlab/weight.hpp"

namespace fejerlab {

/// Discretized convolution operator C_K on a CircleGrid.
///
/// entries(i, j) = J_ij / (h_i h_j), the average of K(theta - phi) over
/// cell i x cell j, so that (A f)_i = sum_j entries(i, j) f_j q_j is the cell
/// average of C_K applied to the step function with values f_j. For an even
/// kernel the matrix is symmetric on any grid.
class OperatorMatrix {
 public:
  OperatorMatrix(GridPtr grid, std::vector<double> entries);

  [[nodiscard]] const CircleGrid& grid() const noexcept { return *grid_; }
  [[nodiscard]] const GridPtr& grid_ptr() const noexcept { return grid_; }
  [[nodiscard]] std::size_t size() const noexcept { return grid_->size(); }

  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size() + j];
  }
  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * size(), size()};
  }
  [[nodiscard]] std::span<const double> quad() const noexcept { return grid_->quad_weights(); }

  [[nodiscard]] std::vector<complex> apply(std::span<const complex> f) const;
  [[nodiscard]] SampledFunction apply(const SampledFunction& f) const;

  [[nodiscard]] bool is_symmetric(double tol = 0.0) const;

 private:
  GridPtr grid_;
  std::vector<double> entries_;
};

/// Assembles the operator. Throws InvalidArgument for kernels with
/// non-finite values.
OperatorMatrix assemble_operator(const Kernel& kernel, GridPtr grid);

/// Column j of the operator, entries(i, j) for all i, without assembling.
std::vector<double> operator_column(const Kernel& kernel, const CircleGrid& grid,
                                    std::size_t j);

struct NormResult {
  double value = 0.0;
  std::size_t index = 0;           ///< maximizing column (L1) or row (Linf)
  std::vector<complex> extremal;   ///< unit-norm input attaining the norm
};

/// Exact norm of the discrete operator on weighted l^1 (column formula) or
/// weighted l^inf (row formula). The grid of A must resolve the weight.
NormResult operator_norm(const OperatorMatrix& A, const Weight& w, SpaceTag tag);

/// Same norms for an even nonnegative kernel without materializing the
/// matrix: both reduce to max_i (A w)_i / w_i with A w evaluated by
/// convolve_piecewise. Throws InvalidArgument for other kernels.
NormResult operator_norm_streamed(const Kernel& kernel, GridPtr grid, const Weight& w,
                                  SpaceTag tag);

struct DualityReport {
  double norm_l1w = 0.0;
  double norm_linfw = 0.0;
  double gap = 0.0;           ///< |norm_l1w - norm_linfw|
  double relative_gap = 0.0;  ///< gap / max(norm_l1w, norm_linfw)
};

/// Compares the operator norms on L^1(w) and on its associate space.
/// Throws InvalidArgument unless the kernel is nonnegative and even and the
/// grid is symmetric.
DualityReport duality_gap(const Kernel& kernel, const Weight& w, GridPtr grid);

}  // namespace fejerlab
