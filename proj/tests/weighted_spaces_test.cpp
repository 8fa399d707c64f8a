#include <doctest.h>

#include <cmath>
#include <fejerlab/fejerlab.hpp>

#include "oracles.hpp"

using namespace fejerlab;
using oracle::pi;

namespace {

/// ||w_M||_1 of the truncated weight from its definition.
double truncated_l1(int M) {
  double s = 0.0;
  for (int m = 1; m <= M; ++m) s += std::sqrt(double(m)) * (1.0 / (2 * m - 1) - 1.0 / (2 * m));
  for (int m = 1; m < M; ++m) s += 1.0 / (2 * m) - 1.0 / (2 * m + 1);
  return s + 1.0 / (2 * M);
}

PiecewiseConstant random_step(oracle::Gen& gen, bool real_nonneg = false) {
  const auto b = gen.breakpoints(gen.integer(1, 8));
  std::vector<complex> v;
  for (std::size_t j = 0; j + 1 < b.size(); ++j)
    v.push_back(real_nonneg ? complex(gen.uniform(0.0, 2.0)) : gen.complex_unit());
  return {b, v};
}

}  // namespace

TEST_SUITE("weighted-spaces") {

TEST_CASE("weight values at the reference angles") {
  for (int M : {1, 2, 5, 30}) {
    const auto w = make_weight(M);
    CHECK(w(pi) == 1.0);
    CHECK(w(-pi) == 1.0);
    if (M >= 2) {
      CHECK(w(pi / 4) == std::sqrt(2.0));
      for (double t : {pi / 5 + 1e-9, 0.7, pi / 4 - 1e-9}) CHECK(w(t) == 1.0);
    }
  }
  CHECK_THROWS_AS(make_weight(0), InvalidArgument);
}

TEST_CASE("weight is even, at least one and exact on every spike") {
  const int M = 12;
  const auto w = make_weight(M);
  oracle::Gen gen(21);
  for (int m = 1; m <= M; ++m) {
    const double lo = pi / (2 * m), hi = pi / (2 * m - 1);
    for (double t : {lo, hi, gen.uniform(lo, hi)}) {
      CHECK(w(t) == std::sqrt(double(m)));
      CHECK(w(-t) == std::sqrt(double(m)));
      CHECK(w.spike_at(t) == m);
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    const double t = gen.uniform(-pi, pi);
    CHECK(w(t) >= 1.0);
    CHECK(w(t) == w(-t));
  }
  CHECK(w(0.0) == 1.0);
  CHECK(w.spike_at(0.5 * pi / (2 * M)) == 0);
  CHECK(w.profile().is_even());
}

TEST_CASE("weight sampled on a grid needs a grid of at least its order") {
  const auto w = make_weight(6);
  CHECK_THROWS_AS(w.on_grid(*make_grid(5, 8)), GridTooCoarse);
  const auto g = make_grid(6, 8);
  const auto v = w.on_grid(*g);
  for (std::size_t i = 0; i < g->size(); ++i) CHECK(v[i] == w(g->nodes()[i]));
}

TEST_CASE("series partial sums and the tail bracket") {
  CHECK(weight_l1_norm_series(1).partial == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  double prev = 0.0;
  for (long long M : {1LL, 2LL, 3LL, 10LL, 100LL, 1000LL}) {
    const auto s = weight_l1_norm_series(M);
    CHECK(s.partial >= prev);
    CHECK(s.partial <= oracle::kWeightL1Exact);
    CHECK(s.partial + s.tail_bound >= oracle::kWeightL1Exact);
    prev = s.partial;
  }
  const auto big = weight_l1_norm_series(1000000);
  CHECK(big.partial <= oracle::kWeightL1Exact);
  CHECK(big.partial + big.tail_bound >= oracle::kWeightL1Exact);
  CHECK(big.tail_bound < 1e-3);
}

TEST_CASE("truncated weight norm") {
  for (int M : {1, 2, 7, 40}) {
    const auto w = make_weight(M);
    CHECK(w.l1_norm() == doctest::Approx(truncated_l1(M)).epsilon(1e-14));
    CHECK(norm(PiecewiseConstant::constant(1.0), w, SpaceTag::WeightedL1) ==
          doctest::Approx(truncated_l1(M)).epsilon(1e-14));
    const auto g = make_grid(M, 4);
    const auto ones = SampledFunction::from_function(g, [](double) { return complex(1.0); });
    CHECK(norm(ones, w, SpaceTag::WeightedL1) == doctest::Approx(truncated_l1(M)).epsilon(1e-13));
  }
  CHECK(make_weight(1).l1_norm() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("bump norms") {
  const auto w = make_weight(20);
  for (int m : {1, 2, 5, 20}) {
    const auto v = make_bump(m);
    CHECK(norm(v, w, SpaceTag::WeightedL1) == doctest::Approx(1.0 / (4.0 * (2 * m - 1))).epsilon(1e-14));
    CHECK(norm(v, w, SpaceTag::WeightedLinf) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(v(-0.5 * (pi / (2 * m) + pi / (2 * m - 1))) == 0.0);
  }
  CHECK(norm(make_bump(1), w, SpaceTag::WeightedL1) == doctest::Approx(0.25));
}

TEST_CASE("Holder pairing examples") {
  const auto w = make_weight(8);
  const auto one = PiecewiseConstant::constant(1.0);
  CHECK(std::abs(holder_pairing(one, one, w).pairing - 1.0) <= 1e-15);

  const auto g = make_grid(8, 16, 0.005);
  const auto f = SampledFunction::from_function(g, [](double t) { return std::polar(1.0, t); });
  const auto h = SampledFunction::from_function(g, [](double t) { return std::polar(1.0, -t); });
  const auto rep = holder_pairing(f, h, w);
  CHECK(std::abs(rep.pairing - 1.0) <= 1e-12);
  CHECK(rep.holds());
  CHECK(rep.norm_g_linfw == doctest::Approx(1.0));
  CHECK(rep.norm_f_l1w == doctest::Approx(w.l1_norm()).epsilon(1e-12));

  for (int m : {1, 3, 8}) {
    const auto v = make_bump(m);
    const auto normalized = v.scaled(1.0 / norm(v, w, SpaceTag::WeightedL1));
    const auto r = holder_pairing(normalized, v, w);
    CHECK(std::abs(r.pairing) <= 1.0 + 1e-12);
    CHECK(r.norm_f_l1w == doctest::Approx(1.0));
    CHECK(r.norm_g_linfw == doctest::Approx(1.0));
  }
}

TEST_CASE("norm axioms on random step functions") {
  const auto w = make_weight(6);
  oracle::Gen gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_step(gen), g = random_step(gen);
    const complex a = gen.complex_unit() * 3.0;
    for (auto tag : {SpaceTag::WeightedL1, SpaceTag::WeightedLinf}) {
      const double nf = norm(f, w, tag), ng = norm(g, w, tag);
      CHECK(norm(f.scaled(a), w, tag) == doctest::Approx(std::abs(a) * nf).epsilon(1e-12));
      CHECK(norm(f.plus(g), w, tag) <= (nf + ng) * (1 + 1e-12));
      CHECK(nf >= 0.0);
    }
    CHECK(l1_norm(f) <= norm(f, w, SpaceTag::WeightedL1) * (1 + 1e-14));
    CHECK(norm(f, w, SpaceTag::WeightedLinf) <= linf_norm(f) * (1 + 1e-14));
    CHECK(holder_pairing(f, g, w).holds(1e-10));
  }
}

TEST_CASE("lattice property") {
  const auto w = make_weight(6);
  oracle::Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_step(gen, true);
    // g = f * u with u in [0, 1] on a common refinement, so 0 <= g <= f
    const auto u = random_step(gen, true);
    std::vector<double> b{-pi};
    std::vector<complex> v;
    PiecewiseConstant::for_each_overlap(f, u, [&](double, double hi, complex fv, complex uv) {
      b.push_back(hi);
      v.push_back(fv * std::min(1.0, uv.real() / 2.0));
    });
    const PiecewiseConstant g(b, v);
    for (auto tag : {SpaceTag::WeightedL1, SpaceTag::WeightedLinf})
      CHECK(norm(g, w, tag) <= norm(f, w, tag) * (1 + 1e-14));
  }
}

TEST_CASE("exact and sampled norms agree for functions constant on cells") {
  const auto w = make_weight(5);
  const auto g = make_grid(5, 4);
  oracle::Gen gen(24);
  std::vector<complex> v;
  for (std::size_t i = 0; i < g->size(); ++i) v.push_back(gen.complex_unit());
  const SampledFunction s(g, v);
  const auto p = s.as_piecewise();
  for (auto tag : {SpaceTag::WeightedL1, SpaceTag::WeightedLinf})
    CHECK(norm(s, w, tag) == doctest::Approx(norm(p, w, tag)).epsilon(1e-13));
  CHECK(std::string(to_string(SpaceTag::WeightedL1)) != std::string(to_string(SpaceTag::WeightedLinf)));
}

}  // TEST_SUITE
