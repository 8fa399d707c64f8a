#include <doctest.h>

#include <cmath>
#include <fejerlab/fejerlab.hpp>

#include "oracles.hpp"

using namespace fejerlab;
using oracle::pi;

namespace {

double fejer_integral(int n, double lo, double hi) {
  // split at the zeros of F_n so Simpson sees smooth pieces
  std::vector<double> cuts{lo, hi};
  for (int j = -n - 1; j <= n + 1; ++j) {
    const double z = 2 * pi * j / (n + 1);
    if (z > lo && z < hi) cuts.push_back(z);
  }
  std::sort(cuts.begin(), cuts.end());
  return oracle::simpson_pieces([n](double t) { return oracle::fejer_cosine_sum(n, t); }, cuts, 1e-14);
}

}  // namespace

TEST_SUITE("blowup") {

TEST_CASE("Fejer mass of F_1 near the origin") {
  CHECK(fejer_mass(1, -pi / 4, 0.0) == doctest::Approx(pi / 4 + std::sin(pi / 4)).epsilon(1e-14));
  CHECK(fejer_mass(0, -1.0, 2.0) == doctest::Approx(3.0));
  CHECK(fejer_mass(7, -pi, pi) == doctest::Approx(2 * pi).epsilon(1e-14));
  for (int n : {3, 20, 150})
    CHECK(fejer_mass(n, -0.3, 0.05) == doctest::Approx(fejer_integral(n, -0.3, 0.05)).epsilon(1e-11));
}

TEST_CASE("localization for m = 1") {
  const auto g = make_grid(1, 8);
  const auto p = localization_params(1, 1000, *g);
  CHECK(p.n_of_m == 1);
  CHECK(p.half_mass == doctest::Approx(pi / 4 + std::sin(pi / 4)).epsilon(1e-13));
  CHECK(p.half_mass >= 1.0 / 3);
  CHECK(p.trimmed_mass >= 0.25);
  CHECK(p.delta_n > 0.0);
}

TEST_CASE("localization for m = 4 is minimal and certified") {
  const int m = 4;
  const auto g = make_grid(4, 8);
  const auto p = localization_params(m, 100000, *g);
  const double a = pi / (4.0 * m * m);
  CHECK(p.n_of_m >= 1);
  CHECK(fejer_integral(p.n_of_m, -a, 0.0) >= 1.0 / 3);
  CHECK(std::abs(fejer_integral(p.n_of_m, -a, 0.0) - p.half_mass) <= 1e-8);
  CHECK(std::abs(p.half_mass_quadrature - p.half_mass) <= 1e-8);
  for (int n = 1; n < p.n_of_m; ++n) CHECK(fejer_integral(n, -a, 0.0) < 1.0 / 3);
  // the condition persists for larger n
  for (int n : {p.n_of_m + 1, 2 * p.n_of_m, 5 * p.n_of_m, 20 * p.n_of_m})
    CHECK(fejer_integral(n, -a, 0.0) >= 1.0 / 3);

  CHECK(fejer_integral(p.n_of_m, -a, -p.delta_n) >= 0.25);
  CHECK(std::abs(fejer_integral(p.n_of_m, -a, -p.delta_n) - p.trimmed_mass) <= 1e-8);
  const double b = pi / (2 * m) - p.delta_n;
  CHECK(g->find_breakpoint(b, 1e-12) <= g->size());
  CHECK(b > pi / (2 * m) - a);
}

TEST_CASE("no qualifying order below the search bound") {
  const auto g = make_grid(9, 8);
  CHECK_THROWS_AS(localization_params(9, 2, *g), NoQualifyingN);
  CHECK_THROWS_AS(localization_params(0, 10, *g), InvalidArgument);
}

TEST_CASE("blow-up bound arithmetic") {
  CHECK(std::sqrt(16.0) / (8 * pi) == doctest::Approx(1.0 / (2 * pi)));
  CHECK(1.0 / (2 * pi) == doctest::Approx(0.15915).epsilon(1e-4));
}

TEST_CASE("blow-up table on a small grid") {
  const std::vector<int> ms{1, 4, 9};
  const auto w = make_weight(9);
  const auto g = make_grid(9, 8);
  const auto rows = fejer_blowup(ms, w, g);
  REQUIRE(rows.size() == ms.size());
  double prev = 0.0;
  for (const auto& r : rows) {
    CHECK(r.bound == doctest::Approx(std::sqrt(double(r.m)) / (8 * pi)).epsilon(1e-15));
    CHECK(r.pointwise_min >= r.bound);
    CHECK(r.norm_linfw >= r.bound);
    CHECK(r.norm_linfw > prev);
    CHECK(r.norm_l1w == doctest::Approx(r.norm_linfw).epsilon(1e-10));
    CHECK(r.norm_l1w <= r.upper_bound_l1w);
    CHECK(r.upper_bound_l1w == doctest::Approx((r.n_m + 1) * w.l1_norm()).epsilon(1e-12));
    prev = r.norm_linfw;
  }

  // pointwise value of C_{F_n} v_m at the certified nodes, from the primitive
  const auto& r = rows[1];
  const auto v = make_bump(r.m);
  double pmin = 1e300;
  for (double t : g->nodes())
    if (t >= pi / (2 * r.m) - r.delta_n && t <= pi / (2 * r.m))
      pmin = std::min(pmin, convolve_at(v, Kernel::fejer(r.n_m), t).real());
  CHECK(pmin >= r.bound);
}

TEST_CASE("norm on L^inf(1/w) stays above the bound for larger orders") {
  const int m = 4;
  const auto w = make_weight(m);
  const auto g = make_grid(m, 8);
  const int n0 = localization_params(m, 100000, *g).n_of_m;
  for (int n : {n0, 2 * n0, 4 * n0, 8 * n0})
    CHECK(operator_norm_streamed(Kernel::fejer(n), g, w, SpaceTag::WeightedLinf).value >=
          std::sqrt(double(m)) / (8 * pi));
}

TEST_CASE("blow-up rejects unresolved configurations") {
  const std::vector<int> ms{1, 9};
  CHECK_THROWS_AS(fejer_blowup(ms, make_weight(9), make_grid(4, 8)), GridTooCoarse);
  CHECK_THROWS_AS(fejer_blowup(ms, make_weight(4), make_grid(9, 8)), InvalidArgument);
  const std::vector<int> big{25};
  CHECK_THROWS_AS(fejer_blowup(big, make_weight(25), make_grid(25, 2)), GridTooCoarse);
}

}  // TEST_SUITE
