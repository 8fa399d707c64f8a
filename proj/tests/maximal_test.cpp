#include <doctest.h>

#include <cmath>
#include <fejerlab/fejerlab.hpp>

#include "oracles.hpp"

using namespace fejerlab;
using oracle::pi;

namespace {

std::vector<double> widths(const CircleGrid& g) { return {g.widths().begin(), g.widths().end()}; }

std::vector<double> moduli(const SampledFunction& f) {
  std::vector<double> v;
  for (const auto& x : f.samples()) v.push_back(std::abs(x));
  return v;
}

SampledFunction random_sampled(oracle::Gen& gen, GridPtr g) {
  std::vector<complex> v;
  for (std::size_t i = 0; i < g->size(); ++i) v.push_back(gen.complex_unit() * gen.uniform(0.0, 3.0));
  return {g, v};
}

}  // namespace

TEST_SUITE("maximal") {

TEST_CASE("constants are fixed") {
  const auto g = make_grid(3, 4);
  const auto f = SampledFunction::from_function(g, [](double) { return complex(-3.0, 4.0); });
  for (double v : maximal_function(f).values) CHECK(v == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("arc indicators reach one on the arc") {
  const auto g = make_grid(4, 6);
  const auto A = PiecewiseConstant::arc_indicator(pi / 7, pi / 2);
  const auto prof = maximal_function(A, g);
  for (std::size_t i = 0; i < g->size(); ++i) {
    const double t = g->nodes()[i];
    if (t > pi / 7 && t < pi / 2) CHECK(prof.values[i] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(prof.values[i] <= 1.0 + 1e-14);
  }
}

TEST_CASE("matches exhaustive enumeration on small grids") {
  oracle::Gen gen(41);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = make_grid(gen.integer(1, 3), gen.integer(2, 3));
    const auto f = random_sampled(gen, g);
    const auto ref = oracle::maximal_exhaustive(widths(*g), moduli(f));
    const auto got = maximal_function(f).values;
    for (std::size_t i = 0; i < g->size(); ++i) CHECK(got[i] == doctest::Approx(ref[i]).epsilon(1e-13));
  }
}

TEST_CASE("quarter arc indicator next to its endpoint") {
  // arc of normalized measure 1/4 ending at the anchor pi/2
  const auto g = make_grid(2, 3);
  const auto A = PiecewiseConstant::arc_indicator(0.0, pi / 2);
  const auto f = SampledFunction::cell_averages(g, A);
  const auto ref = oracle::maximal_exhaustive(widths(*g), moduli(f));
  const auto got = maximal_function(f).values;
  const std::size_t neighbor = g->locate(pi / 2);  // first cell outside the arc
  CHECK(g->breakpoints()[neighbor] == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(got[neighbor] == doctest::Approx(ref[neighbor]).epsilon(1e-14));
  // arc = cell plus the whole indicator
  const double h = g->widths()[neighbor];
  CHECK(got[neighbor] >= (pi / 2) / (pi / 2 + h) - 1e-14);
  CHECK(got[neighbor] < 1.0);
}

TEST_CASE("arcs wrap around the cut at pi") {
  const auto g = make_grid(2, 3);
  // mass concentrated in the first cell; the last cell's best arc wraps
  std::vector<complex> v(g->size(), 0.0);
  v.front() = 1.0;
  const SampledFunction f(g, v);
  const auto got = maximal_function(f).values;
  const double h0 = g->widths().front(), hl = g->widths().back();
  CHECK(got.back() == doctest::Approx(h0 / (h0 + hl)).epsilon(1e-14));
}

TEST_CASE("maximal operator properties") {
  oracle::Gen gen(42);
  const auto g = make_grid(3, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_sampled(gen, g);
    const double a = gen.uniform(0.1, 5.0);
    std::vector<complex> scaled, bigger;
    double sup = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      scaled.push_back(f[i] * complex(0.0, a));
      bigger.push_back(f[i] * gen.uniform(1.0, 2.0));
      sup = std::max(sup, std::abs(f[i]));
    }
    const auto mf = maximal_function(f).values;
    const auto ms = maximal_function(SampledFunction(g, scaled)).values;
    const auto mb = maximal_function(SampledFunction(g, bigger)).values;
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(mf[i] >= std::abs(f[i]) * (1 - 1e-14));
      CHECK(ms[i] == doctest::Approx(a * mf[i]).epsilon(1e-13));
      CHECK(mb[i] >= mf[i] * (1 - 1e-14));
      CHECK(mf[i] <= sup * (1 + 1e-14));
    }
    // sub-averaging over a random arc
    const std::size_t start = gen.integer(0, int(f.size()) - 1);
    const std::size_t len = gen.integer(1, int(f.size()) - 1);
    const double avg = oracle::arc_average(widths(*g), moduli(f), start, len);
    for (std::size_t s = 0; s < len; ++s) CHECK(mf[(start + s) % f.size()] >= avg * (1 - 1e-13));
  }
}

TEST_CASE("ratio for the weight of order one") {
  const auto rows = weight_maximal_ratio(std::vector<int>{1}, 4);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ratio >= 1.0);
}

TEST_CASE("ratio just outside a spike") {
  for (int m : {4, 6, 9}) {
    const auto w = make_weight(m);
    const auto g = make_grid(m, 8);
    const auto prof = maximal_function(w.profile(), g);
    // the cell just below the spike [pi/(2m), pi/(2m-1)]
    const std::size_t i = g->locate(pi / (2 * m)) - 1;
    const double h = g->widths()[i];
    const double spike = pi / (2 * m - 1) - pi / (2 * m);
    const double avg = (std::sqrt(double(m)) * spike + h) / (spike + h);
    CHECK(w(g->nodes()[i]) == 1.0);
    CHECK(prof.values[i] >= avg * (1 - 1e-14));
    CHECK(prof.values[i] / w(g->nodes()[i]) > 1.0);
  }
}

TEST_CASE("ratios grow with the order") {
  const auto rows = weight_maximal_ratio(std::vector<int>{4, 16, 64}, 8);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].ratio < rows[1].ratio);
  CHECK(rows[1].ratio < rows[2].ratio);
  // the same ordering on a finer grid
  const auto fine = weight_maximal_ratio(std::vector<int>{4, 16}, 16);
  CHECK(fine[0].ratio < fine[1].ratio);
  CHECK(fine[0].ratio == doctest::Approx(rows[0].ratio).epsilon(0.05));
}

}  // TEST_SUITE
