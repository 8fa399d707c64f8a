#include "fejerlab/convolution.hpp"

#include <numbers>

#include "detail/trig.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/fourier.hpp"

namespace fejerlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

SampledFunction convolve_direct(const SampledFunction& f, const Kernel& kernel) {
  return convolve_piecewise(f.as_piecewise(), kernel, f.grid_ptr());
}

SampledFunction convolve_piecewise(const PiecewiseConstant& f, const Kernel& kernel,
                                   GridPtr grid) {
  if (!grid) throw InvalidArgument("convolve_piecewise: null grid");
  const auto nodes = grid->nodes();
  const auto widths = grid->widths();
  const auto bp = grid->breakpoints();
  std::vector<complex> out(grid->size());

  if (kernel.is_series()) {
    const auto a = kernel.series();
    const int n = static_cast<int>(a.size()) - 1;
    const auto fh = fourier_coefficients(f, n);
    std::vector<complex> plus(a.size()), minus(a.size());
    for (int k = 0; k <= n; ++k) {
      plus[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] * fh.at(k);
      minus[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] * fh.at(-k);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      complex s = plus[0];
      detail::PhaseSequence phase(nodes[i], 1);
      const double half = 0.5 * widths[i];
      for (int k = 1; k <= n; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        const complex e = phase.value() * detail::sinc(k * half);
        s += plus[kk] * e + minus[kk] * std::conj(e);
        phase.advance();
      }
      out[i] = s;
    }
    return {std::move(grid), std::move(out)};
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    complex s{};
    for (std::size_t p = 0; p < f.pieces(); ++p) {
      if (f.values()[p] == complex{}) continue;
      s += f.values()[p] * kernel.cell_pair_integral(bp[i], bp[i + 1], f.left(p), f.right(p));
    }
    out[i] = s / (kTwoPi * widths[i]);
  }
  return {std::move(grid), std::move(out)};
}

complex convolve_at(const PiecewiseConstant& f, const Kernel& kernel, double theta) {
  complex s{};
  for (std::size_t p = 0; p < f.pieces(); ++p) {
    if (f.values()[p] == complex{}) continue;
    s += f.values()[p] *
         (kernel.antiderivative(theta - f.left(p)) - kernel.antiderivative(theta - f.right(p)));
  }
  return s / kTwoPi;
}

}  // namespace fejerlab
