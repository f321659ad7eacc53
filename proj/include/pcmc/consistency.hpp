#pragma once

#include <cstddef>
#include <string_view>

#include "pcmc/pairwise_matrix.hpp"

namespace pcmc {

/// How per-triad inconsistencies are combined into one matrix index.
enum class TriadAggregation { max, mean };

std::string_view to_string(TriadAggregation agg) noexcept;
/// Accepts "max" or "mean"; throws ParameterError otherwise.
TriadAggregation parse_triad_aggregation(std::string_view text);

struct ConsistencyReport {
  double cf_lambda = 0.0;
  double cf_triad = 0.0;
};

/// Eigenvalue-based factor (lambda_max - n) / (n - 1), without the random-index
/// divisor. Numerators within 1e-12 of zero (or below it) give 0.
double cf_lambda(double lambda_max, std::size_t n);

/// Inconsistency of one triad: min(|1 - a_ik/(a_ij a_jk)|, |1 - a_ij a_jk/a_ik|).
/// Always in [0, 1).
double triad_inconsistency(double a_ij, double a_jk, double a_ik) noexcept;

/// Triad-based factor over all i < j < k; worst case by default.
double cf_triad(const PairwiseMatrix& a, TriadAggregation agg = TriadAggregation::max);

ConsistencyReport consistency_report(const PairwiseMatrix& a, double lambda_max,
                                     TriadAggregation agg = TriadAggregation::max);

}  // namespace pcmc
