#include "fejerlab/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fejerlab/error.hpp"

namespace fejerlab {

HardyReport is_hardy(const FourierCoefficients& f, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("is_hardy: tol must be positive");
  HardyReport r;
  for (int k = -f.window(); k < 0; ++k) {
    const double v = std::abs(f.at(k));
    r.max_negative = std::max(r.max_negative, v);
    if (v > tol) r.violations.push_back(k);
  }
  r.hardy = r.violations.empty();
  return r;
}

DiskExtension disk_extension(const FourierCoefficients& f, double r) {
  const int K = f.window();
  const int P = 4 * (K + 1);
  std::vector<complex> values(static_cast<std::size_t>(P));
  for (int j = 0; j < P; ++j)
    values[static_cast<std::size_t>(j)] = poisson_extend(f, r, 2.0 * std::numbers::pi * j / P);

  DiskExtension ext{f, r, std::vector<complex>(static_cast<std::size_t>(K) + 1)};
  for (int n = 0; n <= K; ++n) {
    complex s{};
    for (int j = 0; j < P; ++j) {
      // Reduce n j mod P first so the angle stays exact.
      const double angle = -2.0 * std::numbers::pi * ((static_cast<long long>(n) * j) % P) / P;
      s += values[static_cast<std::size_t>(j)] * std::polar(1.0, angle);
    }
    ext.taylor[static_cast<std::size_t>(n)] = s / static_cast<double>(P);
  }
  return ext;
}

double taylor_fourier_check(const FourierCoefficients& f, double r) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("taylor_fourier_check: need 0 < r < 1");
  if (!is_hardy(f, 1e-12)) throw InvalidArgument("taylor_fourier_check: input is not Hardy class");
  const auto ext = disk_extension(f, r);
  double worst = 0.0;
  for (int n = 0; n <= f.window(); ++n)
    worst = std::max(worst, std::abs(ext.taylor[static_cast<std::size_t>(n)] - f.at(n) * std::pow(r, n)));
  return worst;
}

ProductReport product_hardy_check(const FourierCoefficients& f, const FourierCoefficients& g,
                                  double tol) {
  if (!is_hardy(f, tol) || !is_hardy(g, tol))
    throw InvalidArgument("product_hardy_check: inputs must be Hardy class");
  ProductReport r;
  r.product = f.product(g);
  for (int k = -r.product.window(); k < 0; ++k)
    r.max_negative = std::max(r.max_negative, std::abs(r.product.at(k)));
  r.zero_mismatch = std::abs(r.product.at(0) - f.at(0) * g.at(0));
  r.ok = r.max_negative <= tol && r.zero_mismatch <= tol;
  return r;
}

}  // namespace fejerlab
