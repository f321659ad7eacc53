#include "pcmc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pcmc/errors.hpp"

namespace pcmc {
namespace {

void check_same_order(const PairwiseMatrix& a, const PairwiseMatrix& b) {
  if (a.order() != b.order()) {
    throw ShapeError("cannot compare matrices of order " + std::to_string(a.order()) + " and " +
                     std::to_string(b.order()));
  }
}

}  // namespace

PairwiseMatrix reconstruct(const SolutionVector& s) { return from_weights(s); }

DistancePair distances(const PairwiseMatrix& a, const PairwiseMatrix& b) {
  check_same_order(a, b);
  const std::size_t n = a.order();
  double sq = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = a(i, j) - b(i, j);
      sq += d * d;
      worst = std::max(worst, std::abs(d));
    }
  }
  return {std::sqrt(sq) / static_cast<double>(n * n), worst};
}

double dist_euclid_mod(const PairwiseMatrix& a, const PairwiseMatrix& b) {
  return distances(a, b).euclid_mod;
}

double dist_cheb(const PairwiseMatrix& a, const PairwiseMatrix& b) { return distances(a, b).cheb; }

}  // namespace pcmc
