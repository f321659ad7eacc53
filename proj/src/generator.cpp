#include "pcmc/generator.hpp"

#include <array>
#include <cmath>
#include <string>

#include "pcmc/errors.hpp"

namespace pcmc {

std::string_view to_string(BaseDistribution dist) noexcept {
  return dist == BaseDistribution::uniform ? "uniform" : "log-uniform";
}

BaseDistribution parse_base_distribution(std::string_view text) {
  if (text == "uniform") return BaseDistribution::uniform;
  if (text == "log-uniform") return BaseDistribution::log_uniform;
  throw ParameterError("base distribution must be 'uniform' or 'log-uniform', got '" +
                       std::string(text) + "'");
}

void validate_deviation(double deviation) {
  if (!(deviation >= 0.0 && deviation < 1.0)) {
    throw ParameterError("deviation D must lie in [0, 1), got " + std::to_string(deviation));
  }
}

double randomizing_multiplier(double deviation, Philox4x32& rng) {
  validate_deviation(deviation);
  const double rho = rng.uniform01();
  return rng.coin() ? 1.0 + rho * deviation : 1.0 - rho * deviation;
}

ConsistentDraw gen_consistent(std::size_t n, double scale_max, Philox4x32& rng,
                              BaseDistribution base) {
  if (n < kMinExperimentOrder || n > kMaxOrder) {
    throw ParameterError("order must lie in [3, 7], got " + std::to_string(n));
  }
  if (!(scale_max > 1.0) || !std::isfinite(scale_max)) {
    throw ParameterError("scale maximum must exceed 1, got " + std::to_string(scale_max));
  }
  std::array<double, kMaxOrder> w{};
  const double log_m = std::log(scale_max);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    w[i] = base == BaseDistribution::uniform ? 1.0 + u * (scale_max - 1.0)
                                             : std::exp(log_m * (2.0 * u - 1.0));
  }
  SolutionVector weights(std::span<const double>(w.data(), n));
  return {weights, from_weights(weights)};
}

PairwiseMatrix perturb(const PairwiseMatrix& consistent, double deviation, Philox4x32& rng) {
  validate_deviation(deviation);
  PairwiseMatrix out = consistent;
  const std::size_t n = out.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.set_pair(i, j, consistent(i, j) * randomizing_multiplier(deviation, rng));
    }
  }
  return out;
}

GeneratedInstance generate_instance(std::size_t n, const PerturbationSpec& spec,
                                    std::uint64_t stream_key, std::uint64_t trial_index) {
  validate_deviation(spec.deviation);
  auto weight_rng = trial_stream(stream_key, trial_index, 0);
  auto multiplier_rng = trial_stream(stream_key, trial_index, 1);
  auto draw = gen_consistent(n, spec.scale_max, weight_rng, spec.base);
  auto perturbed = perturb(draw.matrix, spec.deviation, multiplier_rng);
  return {draw.weights, draw.matrix, perturbed};
}

}  // namespace pcmc
