#pragma once

#include <span>
#include <vector>

#include "fejerlab/grid.hpp"
#include "fejerlab/piecewise.hpp"
#include "fejerlab/sampled.hpp"

namespace fejerlab {

/// Hardy-Littlewood maximal function sampled at the nodes of a grid.
struct MaximalProfile {
  GridPtr grid;
  std::vector<double> values;
};

/// (Mf)(theta_i) = max over arcs I with endpoints on grid breakpoints,
/// containing node i and shorter than the full circle, of (1/m(I)) int_I |f| dm.
/// Arcs may wrap around +-pi. f is taken as constant on each cell.
/// O(N^2) in the number of cells.
MaximalProfile maximal_function(const SampledFunction& f);

/// Same for a step function, via its exact cell averages on `grid`.
MaximalProfile maximal_function(const PiecewiseConstant& f, GridPtr grid);

struct MaximalRatioRow {
  int M = 0;
  double ratio = 0.0;     ///< max_i (M w_M)(theta_i) / w_M(theta_i)
  double argmax = 0.0;    ///< node where the maximum is attained
};

/// Ratio sup (M w)/w for the truncated weights of orders M_list, each on its
/// own grid make_grid(M, points_per_interval).
std::vector<MaximalRatioRow> weight_maximal_ratio(std::span<const int> M_list,
                                                  int points_per_interval = 8);

}  // namespace fejerlab
