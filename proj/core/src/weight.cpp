#include "fejerlab/weight.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fejerlab/error.hpp"

namespace fejerlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

const char* to_string(SpaceTag tag) noexcept {
  return tag == SpaceTag::WeightedL1 ? "weighted-l1" : "weighted-linf";
}

Weight make_weight(int M) {
  if (M < 1) throw InvalidArgument("make_weight: M must be >= 1");
  // Positive side: pi/k for k = 2M..1. The interval (pi/(j+1), pi/j) is
  // spike m when j = 2m - 1 and a gap of value 1 when j is even.
  std::vector<double> pos;
  std::vector<double> pos_values;
  for (int k = 2 * M; k >= 1; --k) pos.push_back(kPi / k);
  for (int j = 2 * M - 1; j >= 1; --j)
    pos_values.push_back(j % 2 == 1 ? std::sqrt(static_cast<double>((j + 1) / 2)) : 1.0);

  std::vector<double> bp;
  std::vector<double> values;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) bp.push_back(-*it);
  for (auto it = pos_values.rbegin(); it != pos_values.rend(); ++it) values.push_back(*it);
  values.push_back(1.0);  // |theta| < pi/(2M)
  bp.insert(bp.end(), pos.begin(), pos.end());
  values.insert(values.end(), pos_values.begin(), pos_values.end());

  Weight w;
  w.order_ = M;
  w.profile_ = PiecewiseConstant::from_real(std::move(bp), values);
  return w;
}

int Weight::spike_at(double theta) const {
  const double t = std::abs(wrap_angle(theta));
  if (t == 0.0) return 0;
  const int guess = static_cast<int>(std::ceil(kPi / (2.0 * t)));
  for (int m = std::max(1, guess - 1); m <= std::min(order_, guess + 1); ++m)
    if (t >= kPi / (2 * m) && t <= kPi / (2 * m - 1)) return m;
  return 0;
}

double Weight::operator()(double theta) const {
  const int m = spike_at(theta);
  return m > 0 ? std::sqrt(static_cast<double>(m)) : 1.0;
}

std::vector<double> Weight::on_grid(const CircleGrid& grid) const {
  if (grid.order() < order_)
    throw GridTooCoarse("Weight::on_grid: grid order " + std::to_string(grid.order()) +
                        " does not resolve weight order " + std::to_string(order_));
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid.nodes()) out.push_back((*this)(t));
  return out;
}

double Weight::l1_norm() const { return profile_.mean().real(); }

SeriesBracket weight_l1_norm_series(long long M_terms) {
  if (M_terms < 1) throw InvalidArgument("weight_l1_norm_series: M_terms must be >= 1");
  // Smallest terms first, in extended precision.
  long double s = 0.0L;
  for (long long m = M_terms; m >= 1; --m) {
    const long double md = static_cast<long double>(m);
    s += 1.0L / (2.0L * md) - 1.0L / (2.0L * md + 1.0L);
    s += std::sqrt(md) * (1.0L / (2.0L * md - 1.0L) - 1.0L / (2.0L * md));
  }
  const double M = static_cast<double>(M_terms);
  SeriesBracket out;
  out.partial = static_cast<double>(s);
  // First series telescopes below 1/(2m) - 1/(2m+2). For m >= 2,
  // 2m - 1 >= 3m/2 bounds the second term by m^{-3/2}/3, whose tail is at
  // most (2/3) M^{-1/2} by the integral test.
  out.tail_bound = 1.0 / (2.0 * (M + 1.0)) + (2.0 / 3.0) / std::sqrt(M);
  return out;
}

PiecewiseConstant make_bump(int m) {
  if (m < 1) throw InvalidArgument("make_bump: m must be >= 1");
  return PiecewiseConstant::arc_indicator(kPi / (2 * m), kPi / (2 * m - 1),
                                          std::sqrt(static_cast<double>(m)));
}

double norm(const PiecewiseConstant& f, const Weight& w, SpaceTag tag) {
  double acc = 0.0;
  PiecewiseConstant::for_each_overlap(f, w.profile(), [&](double lo, double hi, complex fv,
                                                          complex wv) {
    if (tag == SpaceTag::WeightedL1)
      acc += std::abs(fv) * wv.real() * (hi - lo);
    else
      acc = std::max(acc, std::abs(fv) / wv.real());
  });
  return tag == SpaceTag::WeightedL1 ? acc / kTwoPi : acc;
}

double norm(const SampledFunction& f, const Weight& w, SpaceTag tag) {
  const auto wn = w.on_grid(f.grid());
  return norm(f.samples(), f.grid(), wn, tag);
}

double norm(std::span<const complex> values, const CircleGrid& grid,
            std::span<const double> w_nodes, SpaceTag tag) {
  if (values.size() != grid.size() || (!w_nodes.empty() && w_nodes.size() != grid.size()))
    throw InvalidArgument("norm: sizes do not match the grid");
  const auto q = grid.quad_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double wi = w_nodes.empty() ? 1.0 : w_nodes[i];
    if (tag == SpaceTag::WeightedL1)
      acc += std::abs(values[i]) * wi * q[i];
    else
      acc = std::max(acc, std::abs(values[i]) / wi);
  }
  return acc;
}

double l1_norm(const PiecewiseConstant& f) {
  double acc = 0.0;
  for (std::size_t j = 0; j < f.pieces(); ++j) acc += std::abs(f.values()[j]) * f.length(j);
  return acc / kTwoPi;
}

double linf_norm(const PiecewiseConstant& f) {
  double acc = 0.0;
  for (std::size_t j = 0; j < f.pieces(); ++j)
    if (f.length(j) > 0.0) acc = std::max(acc, std::abs(f.values()[j]));
  return acc;
}

HolderReport holder_pairing(const PiecewiseConstant& f, const PiecewiseConstant& g,
                            const Weight& w) {
  HolderReport r;
  PiecewiseConstant::for_each_overlap(
      f, g, [&](double lo, double hi, complex fv, complex gv) { r.pairing += fv * gv * (hi - lo); });
  r.pairing /= kTwoPi;
  r.norm_f_l1w = norm(f, w, SpaceTag::WeightedL1);
  r.norm_g_linfw = norm(g, w, SpaceTag::WeightedLinf);
  return r;
}

HolderReport holder_pairing(const SampledFunction& f, const SampledFunction& g,
                            const Weight& w) {
  if (f.size() != g.size())
    throw InvalidArgument("holder_pairing: functions live on different grids");
  HolderReport r;
  const auto q = f.grid().quad_weights();
  for (std::size_t i = 0; i < f.size(); ++i) r.pairing += f[i] * g[i] * q[i];
  r.norm_f_l1w = norm(f, w, SpaceTag::WeightedL1);
  r.norm_g_linfw = norm(g, w, SpaceTag::WeightedLinf);
  return r;
}

}  // namespace fejerlab
