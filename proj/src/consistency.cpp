#include "pcmc/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pcmc/errors.hpp"

namespace pcmc {

std::string_view to_string(TriadAggregation agg) noexcept {
  return agg == TriadAggregation::max ? "max" : "mean";
}

TriadAggregation parse_triad_aggregation(std::string_view text) {
  if (text == "max") return TriadAggregation::max;
  if (text == "mean") return TriadAggregation::mean;
  throw ParameterError("triad aggregation must be 'max' or 'mean', got '" + std::string(text) + "'");
}

double cf_lambda(double lambda_max, std::size_t n) {
  if (n < 3) throw ShapeError("cf_lambda needs order >= 3, got " + std::to_string(n));
  const double numerator = lambda_max - static_cast<double>(n);
  if (numerator <= 1e-12) return 0.0;
  return numerator / static_cast<double>(n - 1);
}

double triad_inconsistency(double a_ij, double a_jk, double a_ik) noexcept {
  const double ratio = a_ij * a_jk / a_ik;
  return std::min(std::abs(1.0 - 1.0 / ratio), std::abs(1.0 - ratio));
}

double cf_triad(const PairwiseMatrix& a, TriadAggregation agg) {
  const std::size_t n = a.order();
  if (n < 3) throw ShapeError("cf_triad needs order >= 3, got " + std::to_string(n));
  double worst = 0.0;
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double t = triad_inconsistency(a(i, j), a(j, k), a(i, k));
        worst = std::max(worst, t);
        total += t;
        ++count;
      }
    }
  }
  return agg == TriadAggregation::max ? worst : total / static_cast<double>(count);
}

ConsistencyReport consistency_report(const PairwiseMatrix& a, double lambda_max,
                                     TriadAggregation agg) {
  return {cf_lambda(lambda_max, a.order()), cf_triad(a, agg)};
}

}  // namespace pcmc
