#include "pcmc/solvers.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pcmc/errors.hpp"

namespace pcmc {

SolutionVector normalize(std::span<const double> v) {
  // Validates positivity and length.
  const SolutionVector checked(v);
  const double total = checked.sum();
  std::array<double, kMaxOrder> out{};
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / total;
  return SolutionVector(std::span<const double>(out.data(), v.size()));
}

SolutionVector normalize(const SolutionVector& v) { return normalize(v.weights()); }

SolutionVector solve_gm(const PairwiseMatrix& a) {
  const std::size_t n = a.order();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::array<double, kMaxOrder> g{};
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (double v : a.row(i)) prod *= v;
    g[i] = std::pow(prod, inv_n);
  }
  return normalize(std::span<const double>(g.data(), n));
}

EvResult solve_ev(const PairwiseMatrix& a, double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw ParameterError("power iteration tolerance must be positive");
  if (max_iter < 1) throw ParameterError("power iteration needs max_iter >= 1");

  const std::size_t n = a.order();
  std::array<double, kMaxOrder> x{};
  std::array<double, kMaxOrder> y{};
  x.fill(0.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 / static_cast<double>(n);

  double lambda = 0.0;
  double residual = 0.0;
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    double xy = 0.0;
    double xx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      const auto r = a.row(i);
      for (std::size_t j = 0; j < n; ++j) acc += r[j] * x[j];
      y[i] = acc;
      xy += x[i] * acc;
      xx += x[i] * x[i];
    }
    lambda = xy / xx;

    residual = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
      total += y[i];
    }
    if (residual <= tol) {
      return EvResult{SolutionVector(std::span<const double>(x.data(), n)), lambda, iter, residual};
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / total;
  }
  throw ConvergenceError(residual, max_iter);
}

}  // namespace pcmc
