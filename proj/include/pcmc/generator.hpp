#pragma once

// Random consistent matrices and their "not-so-inconsistent" perturbations.
//
// Draw order for one instance, fixed so that streams can be replayed:
//   weight substream (0):     n uniform01 draws, one per weight in index order
//   multiplier substream (1): for each upper element (i < j, row-major)
//                             one uniform01 draw (rho) then one coin (sign)

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "pcmc/pairwise_matrix.hpp"
#include "pcmc/philox.hpp"

namespace pcmc {

inline constexpr double kDefaultScaleMax = 9.0;

/// Distribution of the ground-truth weights of a consistent matrix.
enum class BaseDistribution {
  uniform,      ///< uniform on [1, M]
  log_uniform,  ///< log-uniform on [1/M, M]
};

std::string_view to_string(BaseDistribution dist) noexcept;
BaseDistribution parse_base_distribution(std::string_view text);

struct PerturbationSpec {
  double deviation = 0.0;
  double scale_max = kDefaultScaleMax;
  BaseDistribution base = BaseDistribution::uniform;
};

struct ConsistentDraw {
  SolutionVector weights;
  PairwiseMatrix matrix;
};

struct GeneratedInstance {
  SolutionVector base_weights;
  PairwiseMatrix consistent;
  PairwiseMatrix perturbed;
};

/// Checks 0 <= D < 1. Throws ParameterError.
void validate_deviation(double deviation);

/// 1 + sign * rho * D, rho ~ U[0,1), sign = +-1 equiprobable.
double randomizing_multiplier(double deviation, Philox4x32& rng);

/// n weights from `base` with bound M, and their quotient matrix.
ConsistentDraw gen_consistent(std::size_t n, double scale_max, Philox4x32& rng,
                              BaseDistribution base = BaseDistribution::uniform);

/// Multiplies each upper element by an independent randomizing multiplier
/// and resets the lower triangle to exact reciprocals.
PairwiseMatrix perturb(const PairwiseMatrix& consistent, double deviation, Philox4x32& rng);

/// One full instance drawn from the trial's two substreams.
GeneratedInstance generate_instance(std::size_t n, const PerturbationSpec& spec,
                                    std::uint64_t stream_key, std::uint64_t trial_index);

}  // namespace pcmc
