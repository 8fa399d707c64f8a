#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace fejerlab::lab {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Contract check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

}  // namespace

bool all_hold(const std::vector<Contract>& contracts) {
  return std::all_of(contracts.begin(), contracts.end(), [](const Contract& c) { return c.ok; });
}

Kernel random_even_kernel(std::mt19937_64& rng, int max_cuts) {
  std::uniform_int_distribution<int> count(1, std::max(1, max_cuts));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int P = count(rng);
  std::vector<double> cuts;
  for (int i = 0; i < P; ++i) cuts.push_back(kPi * unit(rng));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  // values[0] on |theta| < cuts[0], values[i] on cuts[i-1] <= |theta| < cuts[i].
  std::vector<double> values;
  for (std::size_t i = 0; i <= cuts.size(); ++i) values.push_back(3.0 * unit(rng));

  std::vector<double> bp{-kPi};
  std::vector<double> v;
  for (std::size_t i = cuts.size(); i-- > 0;) {
    v.push_back(values[i + 1]);
    bp.push_back(-cuts[i]);
  }
  v.push_back(values[0]);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    bp.push_back(cuts[i]);
    v.push_back(values[i + 1]);
  }
  bp.push_back(kPi);
  return Kernel::custom(PiecewiseConstant::from_real(std::move(bp), v));
}

FourierCoefficients random_analytic(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::normal_distribution<double> gauss;
  std::vector<complex> alpha(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& a : alpha) {
    const double re = gauss(rng);
    a = {re, gauss(rng)};
  }
  return FourierCoefficients::analytic(alpha);
}

DualityResult run_duality(const DualityConfig& cfg) {
  DualityResult out;
  std::map<int, GridPtr> grids;
  auto grid_for = [&](int M) {
    auto& g = grids[M];
    if (!g) g = make_grid(M, cfg.ppi);
    return g;
  };
  auto record = [&](std::string family, int index, int M, const Kernel& K) {
    const auto r = duality_gap(K, make_weight(M), grid_for(M));
    out.rows.push_back({std::move(family), index, M, r.norm_l1w, r.norm_linfw, r.relative_gap});
    out.max_relative_gap = std::max(out.max_relative_gap, r.relative_gap);
  };

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick_M(1, cfg.random_max_M);
  for (int t = 0; t < cfg.trials; ++t) {
    const int M = pick_M(rng);
    record("random", t, M, random_even_kernel(rng));
  }
  for (int n = 0; n <= cfg.fejer_max_n; ++n)
    for (int M = 1; M <= cfg.fejer_max_M; ++M) record("fejer", n, M, Kernel::fejer(n));

  out.contracts.push_back(check("duality gap <= 1e-10", out.max_relative_gap <= 1e-10,
                                "max relative gap " + sci(out.max_relative_gap)));
  return out;
}

BlowupResult run_blowup(const BlowupConfig& cfg) {
  if (cfg.m_list.empty()) throw InvalidArgument("blowup: empty m list");
  const int grid_M =
      cfg.grid_M > 0 ? cfg.grid_M : *std::max_element(cfg.m_list.begin(), cfg.m_list.end());
  const auto grid = make_grid(grid_M, cfg.ppi);
  const auto w = make_weight(grid_M);
  BlowupResult out;
  BlowupOptions opt;
  opt.n_max = cfg.n_max;
  try {
    out.rows = fejer_blowup(cfg.m_list, w, grid, opt);
  } catch (const NoQualifyingN& e) {
    out.contracts.push_back(check("localization", false, e.what()));
    return out;
  }
  out.contracts.push_back(check("localization", true, "n(m) found for every m"));

  bool pointwise = true, lower = true, upper = true, routes = true, growth = true;
  std::string where;
  for (std::size_t k = 0; k < out.rows.size(); ++k) {
    const auto& r = out.rows[k];
    pointwise = pointwise && r.pointwise_min >= r.bound;
    lower = lower && r.norm_linfw >= r.bound;
    upper = upper && r.norm_l1w <= r.upper_bound_l1w;
    routes = routes && std::abs(r.norm_l1w - r.norm_linfw) <= 1e-10 * r.norm_linfw;
    if (k > 0 && !(r.norm_linfw > out.rows[k - 1].norm_linfw)) {
      growth = false;
      where = "m = " + std::to_string(r.m);
    }
  }
  out.contracts.push_back(check("pointwise bound sqrt(m)/(8 pi)", pointwise, "min over certified interval"));
  out.contracts.push_back(check("norm bound sqrt(m)/(8 pi)", lower, "norm on L^inf(1/w)"));
  out.contracts.push_back(check("norm growth", growth, growth ? "strictly increasing" : "stalls at " + where));
  out.contracts.push_back(check("upper bound", upper, "||F_n||_inf ||w||_1"));
  out.contracts.push_back(check("norm routes agree", routes, "assembled column vs streamed row formula"));
  return out;
}

ConvergeResult run_fejer_converge(const ConvergeConfig& cfg) {
  const auto grid = make_grid(cfg.grid_M, cfg.ppi);
  const auto f = PiecewiseConstant::arc_indicator(cfg.arc_lo, cfg.arc_hi);
  ConvergeResult out;
  out.n_list = cfg.n_list;
  out.errors = fejer_error_curve(f, grid, nullptr, cfg.n_list);
  bool decreasing = true;
  for (std::size_t k = 1; k < out.errors.size(); ++k)
    decreasing = decreasing && out.errors[k] < out.errors[k - 1] + 1e-12;
  out.contracts.push_back(check("errors decreasing", decreasing, "within 1e-12"));
  if (!out.errors.empty())
    out.contracts.push_back(check("final error below limit", out.errors.back() < cfg.limit,
                                  sci(out.errors.back()) + " vs " + sci(cfg.limit)));
  return out;
}

WitnessResult run_witness(const WitnessConfig& cfg) {
  const auto grid = make_grid(cfg.grid_M, cfg.ppi);
  const auto w = make_weight(cfg.grid_M);
  WitnessResult out;
  try {
    out.report = gliding_hump_witness(w, grid, cfg.options);
  } catch (const StageFailure& e) {
    out.contracts.push_back(check("witness stage " + std::to_string(e.stage()), false, e.what()));
    return out;
  }
  std::vector<int> ns;
  for (const auto& s : out.report.stages) ns.push_back(s.n);
  out.recomputed = fejer_error_curve(out.report.f, &w, ns);

  bool target = true, coherent = true;
  double worst = 0.0;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    const double e = out.report.stages[k].error;
    target = target && e >= cfg.options.target && out.recomputed[k] >= cfg.options.target;
    const double diff = std::abs(out.recomputed[k] - e);
    worst = std::max(worst, diff);
    coherent = coherent && diff <= 1e-10 * std::max(1.0, e);
  }
  out.contracts.push_back(check("stage errors >= target", target, "every stage on the final f"));
  out.contracts.push_back(check("witness coherence", coherent, "max difference " + sci(worst)));
  return out;
}

SampledFunction density_function(const std::string& name, GridPtr grid) {
  if (name == "t3")
    return SampledFunction::from_function(std::move(grid), [](double t) { return std::polar(1.0, 3.0 * t); });
  if (name == "inv-quarter")
    return SampledFunction::from_function(std::move(grid), [](double t) {
      return std::pow(complex(1.0) - std::polar(1.0, t), -0.25);
    });
  throw InvalidArgument("unknown density function '" + name + "'");
}

FourierCoefficients density_spectrum(const std::string& name, int window) {
  if (name == "t3") return FourierCoefficients::monomial(3).rewindowed(window);
  if (name == "inv-quarter") {
    // Binomial series of (1 - z)^{-1/4}: c_k = c_{k-1} (k - 3/4) / k.
    std::vector<complex> c(static_cast<std::size_t>(window) + 1);
    c[0] = 1.0;
    for (int k = 1; k <= window; ++k)
      c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] * ((k - 0.75) / k);
    return FourierCoefficients::analytic(c);
  }
  throw InvalidArgument("unknown density function '" + name + "'");
}

DensityResult run_density(const DensityConfig& cfg) {
  if (cfg.degrees.empty()) throw InvalidArgument("density: empty degree list");
  const auto grid = make_grid(cfg.grid_M, cfg.ppi, cfg.max_cell);
  const auto w = make_weight(cfg.grid_M);
  const int window = *std::max_element(cfg.degrees.begin(), cfg.degrees.end());
  DensityResult out;
  for (const auto& name : cfg.functions) {
    const auto f = density_function(name, grid);
    DensityCurve curve{name, density_curve(f, density_spectrum(name, window), &w, cfg.degrees, cfg.irls)};
    const auto& p = curve.points;
    bool mono = true, feasible = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
      feasible = feasible && p[k].error <= p[k].fejer_error * (1.0 + 1e-12) + 1e-15;
      if (k > 0) mono = mono && p[k].error <= p[k - 1].error * (1.0 + 1e-12) + 1e-15;
    }
    out.contracts.push_back(check(name + " nonincreasing", mono, "best error per degree"));
    out.contracts.push_back(check(name + " feasible-point bound", feasible, "error <= Fejer error"));
    const double first = p.front().error, last = p.back().error;
    if (first <= cfg.exact_tol) {
      // A zero initial error leaves no room for a relative reduction; the
      // meaningful statement is exact recovery at every degree.
      bool exact = std::all_of(p.begin(), p.end(), [&](const DensityPoint& d) { return d.error <= cfg.exact_tol; });
      out.contracts.push_back(check(name + " exact recovery", exact, "all errors <= " + sci(cfg.exact_tol)));
    } else {
      out.contracts.push_back(check(name + " reduction", last < cfg.reduction * first,
                                    "final/initial = " + sci(last / first)));
    }
    out.curves.push_back(std::move(curve));
  }
  return out;
}

MaximalResult run_maximal(const MaximalConfig& cfg) {
  MaximalResult out;
  out.rows = weight_maximal_ratio(cfg.M_list, cfg.ppi);
  bool increasing = true;
  for (std::size_t k = 1; k < out.rows.size(); ++k)
    increasing = increasing && out.rows[k].ratio > out.rows[k - 1].ratio;
  out.contracts.push_back(check("ratio increasing", increasing, "strictly along M list"));
  if (!out.rows.empty()) {
    const double q = out.rows.back().ratio / out.rows.front().ratio;
    out.contracts.push_back(check("ratio growth", q >= cfg.growth,
                                  "last/first = " + sci(q) + " vs " + sci(cfg.growth)));
  }
  return out;
}

TaylorResult run_taylor_fourier(const TaylorConfig& cfg) {
  std::vector<std::pair<std::string, FourierCoefficients>> inputs;
  inputs.emplace_back("constant", FourierCoefficients::monomial(0));
  inputs.emplace_back("geometric-sum-8", FourierCoefficients::analytic(std::vector<complex>(9, 1.0)));
  {
    std::vector<complex> half(41);
    for (std::size_t n = 0; n < half.size(); ++n) half[n] = std::ldexp(1.0, -static_cast<int>(n));
    inputs.emplace_back("half-powers-40", FourierCoefficients::analytic(half));
  }
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < cfg.random_inputs; ++i)
    inputs.emplace_back("random-" + std::to_string(i), random_analytic(rng, cfg.max_degree));

  TaylorResult out;
  for (const auto& [name, f] : inputs)
    for (double r : cfg.radii) {
      const double m = taylor_fourier_check(f, r);
      out.rows.push_back({name, r, m});
      out.max_mismatch = std::max(out.max_mismatch, m);
    }
  out.contracts.push_back(check("Taylor = Fourier", out.max_mismatch <= cfg.tol,
                                "max mismatch " + sci(out.max_mismatch)));
  return out;
}

ProductResult run_product(const ProductConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  ProductResult out;
  bool ok = true;
  double worst_neg = 0.0, worst_zero = 0.0;
  for (int i = 0; i < cfg.pairs; ++i) {
    const auto f = random_analytic(rng, cfg.max_degree);
    const auto g = random_analytic(rng, cfg.max_degree);
    const auto r = product_hardy_check(f, g, cfg.tol);
    out.rows.push_back({i, r.max_negative, r.zero_mismatch});
    ok = ok && r.ok;
    worst_neg = std::max(worst_neg, r.max_negative);
    worst_zero = std::max(worst_zero, r.zero_mismatch);
  }
  out.contracts.push_back(check("product is Hardy", worst_neg <= cfg.tol, "max negative " + sci(worst_neg)));
  out.contracts.push_back(check("product mean", worst_zero <= cfg.tol && ok, "max mismatch " + sci(worst_zero)));
  return out;
}

}  // namespace fejerlab::lab
