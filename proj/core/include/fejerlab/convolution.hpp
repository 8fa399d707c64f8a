#pragma once

#include <vector>

#include "fejerlab/kernel.hpp"
#include "fejerlab/piecewise.hpp"
#include "fejerlab/sampled.hpp"

namespace fejerlab {

/// Direct (space-domain) convolution f * K on the grid of f.
///
/// Each sample is taken as the value of f on its cell and the result is the
/// exact cell average of the convolution of that step function with K:
///   (f*K)_i = sum_j f_j J_ij / (2 pi h_i),
/// with J_ij the double integral of K over cell i x cell j. For functions that
/// are constant on cells this is exact; for smooth f the error against the
/// true convolution at the nodes is O(h^2).
SampledFunction convolve_direct(const SampledFunction& f, const Kernel& kernel);

/// Exact cell averages over `grid` of f * K for a step function f. Cosine
/// series kernels go through the coefficient domain, custom kernels through
/// the cell/interval double integrals. Cost O((cells + pieces) * bandwidth)
/// for series kernels.
SampledFunction convolve_piecewise(const PiecewiseConstant& f, const Kernel& kernel,
                                   GridPtr grid);

/// Pointwise value of (f * K)(theta) for a step function f, computed from the
/// kernel primitive.
complex convolve_at(const PiecewiseConstant& f, const Kernel& kernel, double theta);

}  // namespace fejerlab
