#pragma once

// Experiment grid over (order, deviation) cells. Every trial draws its own
// Philox stream from (master seed, cell, trial index); trials are grouped
// into fixed-size chunks whose partial sums are merged in chunk order, so the
// result does not depend on the worker count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pcmc/consistency.hpp"
#include "pcmc/generator.hpp"
#include "pcmc/pairwise_matrix.hpp"
#include "pcmc/solvers.hpp"

namespace pcmc {

struct TrialRecord {
  std::size_t order = 0;
  double deviation = 0.0;
  double cf_triad = 0.0;
  double cf_lambda = 0.0;
  double lambda_max = 0.0;
  double dist_gm_euclid = 0.0;
  double dist_ev_euclid = 0.0;
  double dist_gm_cheb = 0.0;
  double dist_ev_cheb = 0.0;
  bool rank_reversal = false;
};

struct CellAggregate {
  std::size_t order = 0;
  double deviation = 0.0;
  std::uint64_t trials = 0;    ///< attempted trials
  std::uint64_t failures = 0;  ///< trials whose EV solve did not converge
  double mean_cf_triad = 0.0;
  double mean_cf_lambda = 0.0;
  double mean_dist_gm_euclid = 0.0;
  double mean_dist_ev_euclid = 0.0;
  double diff_euclid = 0.0;
  double wins_gm_euclid_pct = 0.0;
  double mean_dist_gm_cheb = 0.0;
  double mean_dist_ev_cheb = 0.0;
  double diff_cheb = 0.0;
  double wins_ev_cheb_pct = 0.0;
  double rank_reversal_pct = 0.0;
};

struct ExperimentConfig {
  std::vector<std::size_t> orders{4, 5, 6, 7};
  std::vector<double> deviations{0.1, 0.2, 0.3, 0.4, 0.5};
  std::uint64_t trials_per_cell = 1'000'000;
  std::uint64_t master_seed = 0;
  double scale_max = kDefaultScaleMax;
  std::size_t worker_count = 1;
  TriadAggregation triad_agg = TriadAggregation::max;
  BaseDistribution base = BaseDistribution::uniform;
};

/// Throws ParameterError / ShapeError on an invalid configuration.
void validate(const ExperimentConfig& config);

/// True iff the descending rankings of the two vectors differ (ties broken by
/// ascending index). Throws ShapeError on a length mismatch.
bool rank_reversal(const SolutionVector& s_gm, const SolutionVector& s_ev);

/// Solves one matrix by both methods and measures both reconstructions.
/// Propagates ConvergenceError from the EV solver.
TrialRecord evaluate(const PairwiseMatrix& a, double deviation,
                     TriadAggregation agg = TriadAggregation::max);

/// Generates trial `trial_index` of the cell keyed by `stream_key` and evaluates it.
TrialRecord run_trial(std::size_t n, const PerturbationSpec& spec, std::uint64_t stream_key,
                      std::uint64_t trial_index, TriadAggregation agg = TriadAggregation::max);

/// Streaming accumulator for one cell. Sums are Neumaier-compensated; wins
/// are counted in half-units so ties credit 0.5 to each method.
class CellAccumulator {
 public:
  CellAccumulator() = default;
  CellAccumulator(std::size_t order, double deviation) : order_(order), deviation_(deviation) {}

  void add(const TrialRecord& r);
  void add_failure() { ++failures_; }
  /// Appends another partial. Merging partials in a fixed order is deterministic.
  void merge(const CellAccumulator& other);

  std::uint64_t successes() const noexcept { return count_; }
  std::uint64_t failures() const noexcept { return failures_; }

  /// Throws EmptyCellError when no successful trial was recorded.
  CellAggregate finalize() const;

 private:
  struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) noexcept;
    void merge(const CompensatedSum& o) noexcept;
    double value() const noexcept { return sum + comp; }
  };
  enum Field { kCfTriad, kCfLambda, kGmEuclid, kEvEuclid, kGmCheb, kEvCheb, kFieldCount };

  std::size_t order_ = 0;
  double deviation_ = 0.0;
  std::uint64_t count_ = 0;
  std::uint64_t failures_ = 0;
  std::uint64_t gm_euclid_half_wins_ = 0;
  std::uint64_t ev_cheb_half_wins_ = 0;
  std::uint64_t reversals_ = 0;
  CompensatedSum sums_[kFieldCount];
};

/// Means, win frequencies and diffs over a homogeneous, non-empty set of records.
CellAggregate aggregate(std::span<const TrialRecord> records);

struct TrialFailure {
  std::size_t order;
  double deviation;
  std::uint64_t trial_index;
  double residual;
};

struct ExperimentResult {
  std::vector<CellAggregate> cells;     ///< order outer, deviation inner
  std::vector<TrialFailure> failures;   ///< sorted by (cell, trial)
};

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace pcmc
