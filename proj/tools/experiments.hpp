#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fejerlab/fejerlab.hpp"

namespace fejerlab::lab {

/// One named check made by an experiment.
struct Contract {
  std::string name;
  bool ok = false;
  std::string detail;
};

bool all_hold(const std::vector<Contract>& contracts);

/// Even nonnegative step kernel with up to `max_cuts` symmetric cut points.
Kernel random_even_kernel(std::mt19937_64& rng, int max_cuts = 6);

/// Analytic polynomial of degree <= max_degree with Gaussian coefficients.
FourierCoefficients random_analytic(std::mt19937_64& rng, int max_degree);

struct DualityConfig {
  int trials = 100;
  std::uint64_t seed = 7;
  int random_max_M = 6;
  int fejer_max_n = 64;
  int fejer_max_M = 8;
  int ppi = 8;
};

struct DualityRow {
  std::string family;  ///< "fejer" or "random"
  int index = 0;       ///< n for Fejer kernels, trial number otherwise
  int M = 0;
  double norm_l1w = 0.0;
  double norm_linfw = 0.0;
  double relative_gap = 0.0;
};

struct DualityResult {
  std::vector<DualityRow> rows;
  double max_relative_gap = 0.0;
  std::vector<Contract> contracts;
};

DualityResult run_duality(const DualityConfig& cfg);

struct BlowupConfig {
  std::vector<int> m_list{1, 4, 9, 16, 25};
  int grid_M = 0;  ///< 0 means max(m_list)
  int ppi = 8;
  int n_max = 200000;
};

struct BlowupResult {
  std::vector<BlowupRow> rows;
  std::vector<Contract> contracts;
};

BlowupResult run_blowup(const BlowupConfig& cfg);

struct ConvergeConfig {
  std::vector<int> n_list{16, 64, 256, 1024};
  double arc_lo = 0.0;
  double arc_hi = 1.5707963267948966;
  int grid_M = 1;
  int ppi = 8;
  double limit = 1e-2;
};

struct ConvergeResult {
  std::vector<int> n_list;
  std::vector<double> errors;
  std::vector<Contract> contracts;
};

ConvergeResult run_fejer_converge(const ConvergeConfig& cfg);

struct WitnessConfig {
  int grid_M = 64;
  int ppi = 8;
  WitnessOptions options;
};

struct WitnessResult {
  WitnessReport report;
  std::vector<double> recomputed;  ///< fejer_error_curve on the final f
  std::vector<Contract> contracts;
};

WitnessResult run_witness(const WitnessConfig& cfg);

struct DensityConfig {
  std::vector<std::string> functions{"t3", "inv-quarter"};
  std::vector<int> degrees{4, 8, 16, 32, 64};
  int grid_M = 8;
  int ppi = 8;
  double max_cell = 0.02;
  double reduction = 0.2;
  double exact_tol = 1e-8;
  IrlsConfig irls;
};

struct DensityCurve {
  std::string function;
  std::vector<DensityPoint> points;
};

struct DensityResult {
  std::vector<DensityCurve> curves;
  std::vector<Contract> contracts;
};

/// Samples and spectrum of a named test function: "t3" (e^{3i theta}) or
/// "inv-quarter" (boundary values of (1 - z)^{-1/4}).
SampledFunction density_function(const std::string& name, GridPtr grid);
FourierCoefficients density_spectrum(const std::string& name, int window);

DensityResult run_density(const DensityConfig& cfg);

struct MaximalConfig {
  std::vector<int> M_list{4, 16, 64};
  int ppi = 8;
  double growth = 2.0;
};

struct MaximalResult {
  std::vector<MaximalRatioRow> rows;
  std::vector<Contract> contracts;
};

MaximalResult run_maximal(const MaximalConfig& cfg);

struct TaylorConfig {
  std::vector<double> radii{0.5, 0.9};
  int random_inputs = 20;
  int max_degree = 16;
  std::uint64_t seed = 7;
  double tol = 1e-8;
};

struct TaylorRow {
  std::string input;
  double r = 0.0;
  double mismatch = 0.0;
};

struct TaylorResult {
  std::vector<TaylorRow> rows;
  double max_mismatch = 0.0;
  std::vector<Contract> contracts;
};

TaylorResult run_taylor_fourier(const TaylorConfig& cfg);

struct ProductConfig {
  int pairs = 100;
  int max_degree = 16;
  std::uint64_t seed = 7;
  double tol = 1e-12;
};

struct ProductRow {
  int pair = 0;
  double max_negative = 0.0;
  double zero_mismatch = 0.0;
};

struct ProductResult {
  std::vector<ProductRow> rows;
  std::vector<Contract> contracts;
};

ProductResult run_product(const ProductConfig& cfg);

}  // namespace fejerlab::lab
