#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fejerlab/grid.hpp"
#include "fejerlab/piecewise.hpp"

namespace fejerlab {

/// Grid function: one complex value per node of a CircleGrid.
///
/// Samples are point values at the cell midpoints. Quadrature over a sampled
/// function is the composite midpoint rule; convolution operators treat the
/// sample as the value on its whole cell.
class SampledFunction {
 public:
  SampledFunction() = default;
  SampledFunction(GridPtr grid, std::vector<complex> samples);

  /// Samples fn at every node.
  static SampledFunction from_function(GridPtr grid,
                                       const std::function<complex(double)>& fn);

  /// Exact cell averages of a step function.
  static SampledFunction cell_averages(GridPtr grid, const PiecewiseConstant& f);

  [[nodiscard]] const CircleGrid& grid() const noexcept { return *grid_; }
  [[nodiscard]] const GridPtr& grid_ptr() const noexcept { return grid_; }
  [[nodiscard]] std::span<const complex> samples() const noexcept { return samples_; }
  [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
  [[nodiscard]] complex operator[](std::size_t i) const { return samples_[i]; }

  /// The step function equal to samples[i] on cell i.
  [[nodiscard]] PiecewiseConstant as_piecewise() const;

 private:
  GridPtr grid_;
  std::vector<complex> samples_;
};

}  // namespace fejerlab
