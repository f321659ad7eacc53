#pragma once

#include "pcmc/pairwise_matrix.hpp"

namespace pcmc {

struct DistancePair {
  double euclid_mod = 0.0;
  double cheb = 0.0;
};

/// Consistent matrix of quotients s_i / s_j; independent of the scale of s.
PairwiseMatrix reconstruct(const SolutionVector& s);

/// sqrt(sum over all n^2 positions of (a_ij - b_ij)^2) / n^2.
double dist_euclid_mod(const PairwiseMatrix& a, const PairwiseMatrix& b);

/// max over all n^2 positions of |a_ij - b_ij|.
double dist_cheb(const PairwiseMatrix& a, const PairwiseMatrix& b);

/// Both metrics in one pass.
DistancePair distances(const PairwiseMatrix& a, const PairwiseMatrix& b);

}  // namespace pcmc
