#include "fejerlab/maximal.hpp"

#include <algorithm>
#include <cmath>

#include "fejerlab/error.hpp"
#include "fejerlab/weight.hpp"

namespace fejerlab {

MaximalProfile maximal_function(const SampledFunction& f) {
  const std::size_t N = f.size();
  const auto h = f.grid().widths();
  std::vector<double> mass(N);
  for (std::size_t i = 0; i < N; ++i) mass[i] = std::abs(f[i]) * h[i];

  MaximalProfile out{f.grid_ptr(), std::vector<double>(N, 0.0)};
  if (N == 1) {
    out.values[0] = std::abs(f[0]);
    return out;
  }
  // For each start cell s, avg[L] is the average over cells s..s+L-1
  // (cyclically), L = 1..N-1; the best arc from s covering the cell at
  // offset t is the running maximum of avg over L > t.
  std::vector<double> best(N);
  for (std::size_t s = 0; s < N; ++s) {
    double m = 0.0, len = 0.0;
    for (std::size_t L = 1; L < N; ++L) {
      const std::size_t c = (s + L - 1) % N;
      m += mass[c];
      len += h[c];
      best[L - 1] = m / len;
    }
    double running = 0.0;
    for (std::size_t t = N - 1; t-- > 0;) {
      running = std::max(running, best[t]);
      double& v = out.values[(s + t) % N];
      v = std::max(v, running);
    }
  }
  return out;
}

MaximalProfile maximal_function(const PiecewiseConstant& f, GridPtr grid) {
  return maximal_function(SampledFunction::cell_averages(std::move(grid), f));
}

std::vector<MaximalRatioRow> weight_maximal_ratio(std::span<const int> M_list,
                                                  int points_per_interval) {
  std::vector<MaximalRatioRow> rows;
  for (int M : M_list) {
    const auto grid = make_grid(M, points_per_interval);
    const auto w = make_weight(M);
    const auto wn = w.on_grid(*grid);
    const auto Mw = maximal_function(w.profile(), grid);
    MaximalRatioRow row;
    row.M = M;
    for (std::size_t i = 0; i < wn.size(); ++i) {
      const double r = Mw.values[i] / wn[i];
      if (r > row.ratio) {
        row.ratio = r;
        row.argmax = grid->nodes()[i];
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fejerlab
