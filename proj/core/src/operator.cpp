#include "fejerlab/operator.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/trig.hpp"
#include "fejerlab/convolution.hpp"
#include "fejerlab/error.hpp"

namespace fejerlab {

namespace {

// Columns of the factor B are processed in blocks to bound memory.
constexpr std::size_t kBlockBytes = std::size_t{64} << 20;

void require_finite(const Kernel& kernel) {
  if (!kernel.is_finite()) throw InvalidArgument("assemble_operator: kernel has non-finite values");
}

// A = a_0 + B B^T with B(i, 2k-1..2k) = sqrt(2 a_k) sinc(k h_i / 2) (cos, sin)(k m_i).
std::vector<double> assemble_series(const Kernel& kernel, const CircleGrid& grid) {
  const auto a = kernel.series();
  const auto N = static_cast<Eigen::Index>(grid.size());
  const auto nodes = grid.nodes();
  const auto widths = grid.widths();
  const std::size_t n = a.size() - 1;

  Eigen::MatrixXd A = Eigen::MatrixXd::Constant(N, N, a[0]);
  const std::size_t per_block =
      std::max<std::size_t>(1, kBlockBytes / (2 * sizeof(double) * static_cast<std::size_t>(N)));
  for (std::size_t k0 = 1; k0 <= n; k0 += per_block) {
    const std::size_t k1 = std::min(n + 1, k0 + per_block);
    Eigen::MatrixXd B(N, static_cast<Eigen::Index>(2 * (k1 - k0)));
    for (Eigen::Index i = 0; i < N; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      detail::PhaseSequence phase(nodes[ii], static_cast<int>(k0));
      for (std::size_t k = k0; k < k1; ++k) {
        const double s = std::sqrt(2.0 * a[k]) * detail::sinc(0.5 * k * widths[ii]);
        const auto c = static_cast<Eigen::Index>(2 * (k - k0));
        B(i, c) = s * phase.cos();
        B(i, c + 1) = s * phase.sin();
        phase.advance();
      }
    }
    A.selfadjointView<Eigen::Lower>().rankUpdate(B);
  }

  std::vector<double> out(static_cast<std::size_t>(N * N));
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      out[static_cast<std::size_t>(i * N + j)] = A(i, j);
      out[static_cast<std::size_t>(j * N + i)] = A(i, j);
    }
  return out;
}

std::vector<double> assemble_custom(const Kernel& kernel, const CircleGrid& grid) {
  const std::size_t N = grid.size();
  const auto bp = grid.breakpoints();
  const auto h = grid.widths();
  const bool even = kernel.is_even();
  std::vector<double> out(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = even ? i : 0; j < N; ++j) {
      const double v = kernel.cell_pair_integral(bp[i], bp[i + 1], bp[j], bp[j + 1]) / (h[i] * h[j]);
      out[i * N + j] = v;
      if (even) out[j * N + i] = v;
    }
  return out;
}

NormResult extremal_l1(std::size_t j, double value, const CircleGrid& grid,
                       std::span<const double> w) {
  NormResult r;
  r.value = value;
  r.index = j;
  r.extremal.assign(grid.size(), complex{});
  r.extremal[j] = 1.0 / (w[j] * grid.quad_weights()[j]);
  return r;
}

}  // namespace

OperatorMatrix::OperatorMatrix(GridPtr grid, std::vector<double> entries)
    : grid_(std::move(grid)), entries_(std::move(entries)) {
  if (!grid_) throw InvalidArgument("OperatorMatrix: null grid");
  if (entries_.size() != grid_->size() * grid_->size())
    throw InvalidArgument("OperatorMatrix: entries must be N x N");
}

std::vector<complex> OperatorMatrix::apply(std::span<const complex> f) const {
  if (f.size() != size()) throw InvalidArgument("OperatorMatrix::apply: size mismatch");
  const auto q = quad();
  std::vector<complex> fq(size());
  for (std::size_t j = 0; j < size(); ++j) fq[j] = f[j] * q[j];
  std::vector<complex> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto r = row(i);
    complex s{};
    for (std::size_t j = 0; j < size(); ++j) s += r[j] * fq[j];
    out[i] = s;
  }
  return out;
}

SampledFunction OperatorMatrix::apply(const SampledFunction& f) const {
  return {grid_, apply(f.samples())};
}

bool OperatorMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) {
      const double a = (*this)(i, j), b = (*this)(j, i);
      if (std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)})) return false;
    }
  return true;
}

OperatorMatrix assemble_operator(const Kernel& kernel, GridPtr grid) {
  if (!grid) throw InvalidArgument("assemble_operator: null grid");
  require_finite(kernel);
  auto entries = kernel.is_series() ? assemble_series(kernel, *grid) : assemble_custom(kernel, *grid);
  return {std::move(grid), std::move(entries)};
}

std::vector<double> operator_column(const Kernel& kernel, const CircleGrid& grid,
                                    std::size_t j) {
  if (j >= grid.size()) throw InvalidArgument("operator_column: index out of range");
  require_finite(kernel);
  const std::size_t N = grid.size();
  const auto bp = grid.breakpoints();
  const auto h = grid.widths();
  const auto nodes = grid.nodes();
  std::vector<double> col(N);
  if (kernel.is_series()) {
    const auto a = kernel.series();
    const double hj = 0.5 * h[j];
    std::vector<double> aj(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) aj[k] = (k == 0 ? 1.0 : 2.0) * a[k] * detail::sinc(k * hj);
    for (std::size_t i = 0; i < N; ++i) {
      const double hi = 0.5 * h[i];
      detail::PhaseSequence phase(nodes[i] - nodes[j], 1);
      double s = aj[0];
      for (std::size_t k = 1; k < a.size(); ++k) {
        s += aj[k] * detail::sinc(k * hi) * phase.cos();
        phase.advance();
      }
      col[i] = s;
    }
    return col;
  }
  for (std::size_t i = 0; i < N; ++i)
    col[i] = kernel.cell_pair_integral(bp[i], bp[i + 1], bp[j], bp[j + 1]) / (h[i] * h[j]);
  return col;
}

NormResult operator_norm(const OperatorMatrix& A, const Weight& w, SpaceTag tag) {
  const auto wn = w.on_grid(A.grid());
  const auto q = A.quad();
  const std::size_t N = A.size();
  if (tag == SpaceTag::WeightedL1) {
    std::vector<double> col(N, 0.0);
    for (std::size_t i = 0; i < N; ++i) {
      const auto r = A.row(i);
      const double s = wn[i] * q[i];
      for (std::size_t j = 0; j < N; ++j) col[j] += std::abs(r[j]) * s;
    }
    std::size_t best = 0;
    double value = -1.0;
    for (std::size_t j = 0; j < N; ++j) {
      const double v = col[j] / wn[j];
      if (v > value) value = v, best = j;
    }
    return extremal_l1(best, value, A.grid(), wn);
  }

  std::size_t best = 0;
  double value = -1.0;
  for (std::size_t i = 0; i < N; ++i) {
    const auto r = A.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += std::abs(r[j]) * wn[j] * q[j];
    s /= wn[i];
    if (s > value) value = s, best = i;
  }
  NormResult res;
  res.value = value;
  res.index = best;
  res.extremal.resize(N);
  const auto r = A.row(best);
  for (std::size_t j = 0; j < N; ++j) res.extremal[j] = r[j] < 0.0 ? -wn[j] : wn[j];
  return res;
}

NormResult operator_norm_streamed(const Kernel& kernel, GridPtr grid, const Weight& w,
                                  SpaceTag tag) {
  if (!kernel.is_even() || !kernel.is_nonnegative())
    throw InvalidArgument("operator_norm_streamed: kernel must be even and nonnegative");
  require_finite(kernel);
  const auto wn = w.on_grid(*grid);
  const auto Aw = convolve_piecewise(w.profile(), kernel, grid);
  std::size_t best = 0;
  double value = -1.0;
  for (std::size_t i = 0; i < wn.size(); ++i) {
    const double v = Aw[i].real() / wn[i];
    if (v > value) value = v, best = i;
  }
  if (tag == SpaceTag::WeightedL1) return extremal_l1(best, value, *grid, wn);
  NormResult res;
  res.value = value;
  res.index = best;
  res.extremal.assign(wn.begin(), wn.end());
  return res;
}

DualityReport duality_gap(const Kernel& kernel, const Weight& w, GridPtr grid) {
  if (!kernel.is_nonnegative()) throw InvalidArgument("duality_gap: kernel must be nonnegative");
  if (!kernel.is_even()) throw InvalidArgument("duality_gap: kernel must be even");
  if (!grid || !grid->is_symmetric()) throw InvalidArgument("duality_gap: grid must be symmetric");
  const auto A = assemble_operator(kernel, grid);
  DualityReport r;
  r.norm_l1w = operator_norm(A, w, SpaceTag::WeightedL1).value;
  r.norm_linfw = operator_norm(A, w, SpaceTag::WeightedLinf).value;
  r.gap = std::abs(r.norm_l1w - r.norm_linfw);
  const double scale = std::max(r.norm_l1w, r.norm_linfw);
  r.relative_gap = scale > 0.0 ? r.gap / scale : 0.0;
  return r;
}

}  // namespace fejerlab
