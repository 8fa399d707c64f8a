#include "fejerlab/approx.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "detail/trig.hpp"
#include "fejerlab/convolution.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/kernel.hpp"
#include "fejerlab/operator.hpp"

namespace fejerlab {

namespace {

std::vector<double> weight_nodes(const Weight* w, const CircleGrid& grid) {
  return w ? w->on_grid(grid) : std::vector<double>(grid.size(), 1.0);
}

// Huber surrogate of |r| whose quadratic majorizer at r0 is the IRLS weight
// 1 / max(|r0|, eps); minimizing the majorizer never increases it.
double huber(double t, double eps) { return t >= eps ? t : 0.5 * (t * t / eps + eps); }

double cell_model_error(const SampledFunction& f, const SampledFunction& g,
                        std::span<const double> wn) {
  const auto q = f.grid().quad_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += std::abs(g[i] - f[i]) * wn[i] * q[i];
  return acc;
}

}  // namespace

PolyCoeffs::PolyCoeffs(std::vector<complex> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw InvalidArgument("PolyCoeffs: need at least one coefficient");
}

complex PolyCoeffs::operator()(double theta) const {
  const complex t = std::polar(1.0, theta);
  complex s{};
  for (auto it = alpha_.rbegin(); it != alpha_.rend(); ++it) s = s * t + *it;
  return s;
}

PolyCoeffs PolyCoeffs::resized(int degree) const {
  if (degree < 0) throw InvalidArgument("PolyCoeffs::resized: negative degree");
  std::vector<complex> a(alpha_);
  a.resize(static_cast<std::size_t>(degree) + 1);
  return PolyCoeffs(std::move(a));
}

PolyCoeffs PolyCoeffs::from_fourier(const FourierCoefficients& f, int degree) {
  if (degree < 0) throw InvalidArgument("PolyCoeffs::from_fourier: negative degree");
  std::vector<complex> a(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) a[static_cast<std::size_t>(k)] = f.at(k);
  return PolyCoeffs(std::move(a));
}

double poly_error_l1w(const SampledFunction& f, const Weight* w, const PolyCoeffs& q) {
  const auto wn = weight_nodes(w, f.grid());
  const auto nodes = f.grid().nodes();
  const auto quad = f.grid().quad_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += std::abs(f[i] - q(nodes[i])) * wn[i] * quad[i];
  return acc;
}

BestPoly best_poly_l1w(const SampledFunction& f, const Weight* w, int degree,
                       const IrlsConfig& cfg, std::span<const PolyCoeffs> candidates) {
  if (degree < 0) throw InvalidArgument("best_poly_l1w: degree must be >= 0");
  if (cfg.max_iters < 1 || !(cfg.smoothing > 0.0) || !(cfg.tol > 0.0))
    throw InvalidArgument("best_poly_l1w: IrlsConfig fields must be positive");

  using Eigen::Index;
  const auto wn = weight_nodes(w, f.grid());
  const auto quad = f.grid().quad_weights();
  const auto nodes = f.grid().nodes();
  const auto N = static_cast<Index>(f.size());
  const Index cols = degree + 1;

  Eigen::MatrixXcd V(N, cols);
  Eigen::VectorXcd fv(N);
  Eigen::VectorXd base(N);
  for (Index i = 0; i < N; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    detail::PhaseSequence phase(nodes[ii]);
    for (Index k = 0; k < cols; ++k) {
      V(i, k) = phase.value();
      phase.advance();
    }
    fv(i) = f[ii];
    base(i) = wn[ii] * quad[ii];
  }

  auto objective = [&](const Eigen::VectorXcd& r) {
    double s = 0.0;
    for (Index i = 0; i < N; ++i) s += std::abs(r(i)) * base(i);
    return s;
  };
  auto smoothed = [&](const Eigen::VectorXcd& r) {
    double s = 0.0;
    for (Index i = 0; i < N; ++i) s += huber(std::abs(r(i)), cfg.smoothing) * base(i);
    return s;
  };
  auto weighted_solve = [&](const Eigen::VectorXd& omega) {
    const Eigen::VectorXd d = omega.cwiseSqrt();
    const Eigen::MatrixXcd DV = d.asDiagonal() * V;
    const Eigen::VectorXcd Df = d.asDiagonal() * fv;
    return Eigen::VectorXcd(DV.householderQr().solve(Df));
  };

  // Starting point: weighted least squares, or a better supplied candidate.
  Eigen::VectorXcd alpha = weighted_solve(base);
  Eigen::VectorXcd r = fv - V * alpha;
  double start_err = objective(r);
  for (const auto& c : candidates) {
    const auto padded = c.resized(degree);
    Eigen::VectorXcd a(cols);
    for (Index k = 0; k < cols; ++k) a(k) = padded.coeffs()[static_cast<std::size_t>(k)];
    Eigen::VectorXcd rc = fv - V * a;
    const double e = objective(rc);
    if (e < start_err) {
      start_err = e;
      alpha = a;
      r = rc;
    }
  }

  BestPoly out;
  Eigen::VectorXcd best_alpha = alpha;
  double best_err = start_err;
  double prev = smoothed(r);
  out.smoothed_history.push_back(prev);

  for (int it = 1; it <= cfg.max_iters; ++it) {
    Eigen::VectorXd omega(N);
    for (Index i = 0; i < N; ++i) omega(i) = base(i) / std::max(std::abs(r(i)), cfg.smoothing);
    alpha = weighted_solve(omega);
    r = fv - V * alpha;
    const double s = smoothed(r);
    out.smoothed_history.push_back(s);
    out.iterations = it;
    if (s > prev * (1.0 + 1e-12) + 1e-300) out.monotone = false;
    const double e = objective(r);
    if (e < best_err) {
      best_err = e;
      best_alpha = alpha;
    }
    if (prev - s <= cfg.tol * prev) {
      out.converged = true;
      break;
    }
    prev = s;
  }

  std::vector<complex> coeffs(static_cast<std::size_t>(cols));
  for (Index k = 0; k < cols; ++k) coeffs[static_cast<std::size_t>(k)] = best_alpha(k);
  out.poly = PolyCoeffs(std::move(coeffs));
  out.error = best_err;
  return out;
}

std::vector<DensityPoint> density_curve(const SampledFunction& f,
                                        const FourierCoefficients& spectrum, const Weight* w,
                                        std::span<const int> degrees, const IrlsConfig& cfg) {
  if (!std::is_sorted(degrees.begin(), degrees.end()))
    throw InvalidArgument("density_curve: degrees must be increasing");
  std::vector<DensityPoint> out;
  std::vector<PolyCoeffs> candidates;
  const auto fejer_errors = fejer_error_curve(f, spectrum, w, degrees);
  for (std::size_t d = 0; d < degrees.size(); ++d) {
    const int n = degrees[d];
    candidates.push_back(PolyCoeffs::from_fourier(fejer_mean(spectrum, n), n));
    const auto best = best_poly_l1w(f, w, n, cfg, candidates);
    out.push_back({n, best.error, fejer_errors[d], best.converged});
    candidates.assign({best.poly});
  }
  return out;
}

std::vector<double> fejer_error_curve(const PiecewiseConstant& f, GridPtr grid, const Weight* w,
                                      std::span<const int> n_list) {
  const auto wn = weight_nodes(w, *grid);
  const auto fc = SampledFunction::cell_averages(grid, f);
  std::vector<double> out;
  for (int n : n_list) out.push_back(cell_model_error(fc, convolve_piecewise(f, Kernel::fejer(n), grid), wn));
  return out;
}

std::vector<double> fejer_error_curve(const SampledFunction& f, const Weight* w,
                                      std::span<const int> n_list) {
  return fejer_error_curve(f.as_piecewise(), f.grid_ptr(), w, n_list);
}

std::vector<double> fejer_error_curve(const SampledFunction& f,
                                      const FourierCoefficients& spectrum, const Weight* w,
                                      std::span<const int> n_list) {
  const auto wn = weight_nodes(w, f.grid());
  std::vector<double> out;
  for (int n : n_list)
    out.push_back(cell_model_error(f, synthesize_at_nodes(fejer_mean(spectrum, n), f.grid_ptr()), wn));
  return out;
}

namespace {

std::vector<int> order_ladder(const WitnessOptions& o) {
  std::vector<int> ladder;
  for (double n = o.n_start; n <= o.n_max;) {
    ladder.push_back(static_cast<int>(n));
    n = std::max(std::floor(n) + 1.0, std::ceil(n * o.n_growth));
  }
  return ladder;
}

// ||C_{F_n} f - f||_{L^1(w)} in the cell model, assembled column by column
// over the support of f (independent of the coefficient-domain route).
double certified_error(const std::vector<complex>& values, int n, const CircleGrid& grid,
                       std::span<const double> wn) {
  const auto K = Kernel::fejer(n);
  const auto q = grid.quad_weights();
  std::vector<complex> Af(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == complex{}) continue;
    const auto col = operator_column(K, grid, j);
    for (std::size_t i = 0; i < values.size(); ++i) Af[i] += col[i] * values[j] * q[j];
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) acc += std::abs(Af[i] - values[i]) * wn[i] * q[i];
  return acc;
}

}  // namespace

WitnessReport gliding_hump_witness(const Weight& w, GridPtr grid, const WitnessOptions& o) {
  if (!grid) throw InvalidArgument("gliding_hump_witness: null grid");
  if (o.stages < 1 || !(o.target > 0.0) || !(o.ratio > 0.0 && o.ratio < 1.0) || o.n_start < 1 ||
      o.n_max < o.n_start || !(o.n_growth > 1.0) || o.retries < 0)
    throw InvalidArgument("gliding_hump_witness: invalid options");
  const auto wn = w.on_grid(*grid);
  const auto q = grid->quad_weights();
  const auto nodes = grid->nodes();
  const auto ladder = order_ladder(o);
  const std::size_t N = grid->size();

  int failed_stage = 1;
  std::string reason;
  for (int attempt = 0; attempt <= o.retries; ++attempt) {
    const double requirement = o.target * (1.0 + 0.25 * attempt);
    std::vector<complex> f(N);
    std::vector<WitnessStage> stages;
    std::size_t pos = 0;
    double last_norm = 0.0;
    failed_stage = 0;
    for (int k = 1; k <= o.stages && failed_stage == 0; ++k) {
      const double c = std::pow(o.ratio, k);
      bool found = false;
      for (; pos < ladder.size() && !found; ++pos) {
        const int n = ladder[pos];
        const auto K = Kernel::fejer(n);
        const auto ext = operator_norm_streamed(K, grid, w, SpaceTag::WeightedL1);
        if (o.growing_norms && ext.value <= last_norm) continue;
        auto trial = f;
        trial[ext.index] += c / (wn[ext.index] * q[ext.index]);
        const SampledFunction tf(grid, trial);
        const double err = cell_model_error(tf, convolve_direct(tf, K), wn);
        if (err >= requirement) {
          stages.push_back({n, ext.index, nodes[ext.index], c, ext.value, err});
          f = std::move(trial);
          last_norm = ext.value;
          found = true;
        }
      }
      if (!found) {
        failed_stage = k;
        reason = "no order n <= " + std::to_string(o.n_max) + " reaches error " +
                 std::to_string(requirement) + " at stage " + std::to_string(k);
      }
    }
    if (failed_stage != 0) continue;

    for (std::size_t s = 0; s < stages.size() && failed_stage == 0; ++s) {
      stages[s].error = certified_error(f, stages[s].n, *grid, wn);
      if (stages[s].error < o.target) {
        failed_stage = static_cast<int>(s) + 1;
        reason = "stage " + std::to_string(s + 1) + " error dropped to " +
                 std::to_string(stages[s].error) + " on the assembled function";
      }
    }
    if (failed_stage != 0) continue;

    WitnessReport report;
    report.stages = std::move(stages);
    report.f_norm = norm(f, *grid, wn, SpaceTag::WeightedL1);
    report.f = SampledFunction(grid, std::move(f));
    report.attempts = attempt + 1;
    return report;
  }
  throw StageFailure(failed_stage, "gliding_hump_witness: " + reason);
}

}  // namespace fejerlab
