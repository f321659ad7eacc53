#pragma once

#include <cstddef>
#include <span>

#include "pcmc/pairwise_matrix.hpp"

namespace pcmc {

inline constexpr double kDefaultEvTolerance = 1e-12;
inline constexpr std::size_t kDefaultEvMaxIterations = 10'000;

struct EvResult {
  SolutionVector solution;
  double lambda_max = 0.0;
  std::size_t iterations = 0;
  /// ||A s - lambda s||_inf at return, s normalized to unit sum.
  double residual = 0.0;
};

/// Divides every component by the component sum.
SolutionVector normalize(std::span<const double> v);
SolutionVector normalize(const SolutionVector& v);

/// Normalized row geometric means.
SolutionVector solve_gm(const PairwiseMatrix& a);

/// Principal (Perron) eigenpair by power iteration.
///
/// Starts from the all-ones vector, renormalizes to unit sum every step and
/// estimates the eigenvalue with the Rayleigh quotient. Returns once
/// ||A s - lambda s||_inf <= tol; throws ConvergenceError after max_iter
/// steps otherwise.
EvResult solve_ev(const PairwiseMatrix& a, double tol = kDefaultEvTolerance,
                  std::size_t max_iter = kDefaultEvMaxIterations);

}  // namespace pcmc
