#include "fejerlab/sampled.hpp"

#include <numbers>

#include "fejerlab/error.hpp"

namespace fejerlab {

SampledFunction::SampledFunction(GridPtr grid, std::vector<complex> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (!grid_) throw InvalidArgument("SampledFunction: null grid");
  if (samples_.size() != grid_->size())
    throw InvalidArgument("SampledFunction: one sample per node required");
}

SampledFunction SampledFunction::from_function(GridPtr grid,
                                               const std::function<complex(double)>& fn) {
  std::vector<complex> s;
  s.reserve(grid->size());
  for (double t : grid->nodes()) s.push_back(fn(t));
  return {std::move(grid), std::move(s)};
}

SampledFunction SampledFunction::cell_averages(GridPtr grid, const PiecewiseConstant& f) {
  const auto bp = grid->breakpoints();
  std::vector<complex> s(grid->size());
  // Both partitions cover [-pi, pi]; sweep them together.
  std::size_t p = 0;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const double a = bp[i], b = bp[i + 1];
    while (p + 1 < f.pieces() && f.right(p) <= a) ++p;
    complex acc{};
    for (std::size_t q = p; q < f.pieces() && f.left(q) < b; ++q) {
      const double lo = std::max(a, f.left(q)), hi = std::min(b, f.right(q));
      if (hi > lo) acc += f.values()[q] * (hi - lo);
    }
    s[i] = acc / (b - a);
  }
  return {std::move(grid), std::move(s)};
}

PiecewiseConstant SampledFunction::as_piecewise() const {
  const auto bp = grid_->breakpoints();
  return {std::vector<double>(bp.begin(), bp.end()), samples_};
}

}  // namespace fejerlab
