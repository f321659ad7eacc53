#include "pcmc/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#include "pcmc/errors.hpp"
#include "pcmc/metrics.hpp"
#include "pcmc/philox.hpp"

namespace pcmc {
namespace {

constexpr std::uint64_t kChunkTrials = 4096;

std::array<std::size_t, kMaxOrder> descending_rank(const SolutionVector& s) {
  std::array<std::size_t, kMaxOrder> idx{};
  std::iota(idx.begin(), idx.begin() + s.size(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.begin() + s.size(),
                   [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
  return idx;
}

std::string cell_name(std::size_t order, double deviation) {
  std::ostringstream os;
  os << "cell (order " << order << ", D " << deviation << ")";
  return os.str();
}

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.orders.empty()) throw ParameterError("experiment needs at least one order");
  if (config.deviations.empty()) throw ParameterError("experiment needs at least one deviation");
  if (config.trials_per_cell < 1) throw ParameterError("trials per cell must be >= 1");
  if (config.worker_count < 1) throw ParameterError("worker count must be >= 1");
  if (!(config.scale_max > 1.0) || !std::isfinite(config.scale_max)) {
    throw ParameterError("scale maximum must exceed 1");
  }
  for (std::size_t n : config.orders) {
    if (n < kMinExperimentOrder || n > kMaxOrder) {
      throw ParameterError("order must lie in [3, 7], got " + std::to_string(n));
    }
  }
  for (double d : config.deviations) validate_deviation(d);
}

bool rank_reversal(const SolutionVector& s_gm, const SolutionVector& s_ev) {
  if (s_gm.size() != s_ev.size()) {
    throw ShapeError("rank comparison needs equal lengths, got " + std::to_string(s_gm.size()) +
                     " and " + std::to_string(s_ev.size()));
  }
  return descending_rank(s_gm) != descending_rank(s_ev);
}

TrialRecord evaluate(const PairwiseMatrix& a, double deviation, TriadAggregation agg) {
  const SolutionVector gm = solve_gm(a);
  const EvResult ev = solve_ev(a);
  const DistancePair d_gm = distances(a, reconstruct(gm));
  const DistancePair d_ev = distances(a, reconstruct(ev.solution));

  TrialRecord r;
  r.order = a.order();
  r.deviation = deviation;
  r.cf_triad = cf_triad(a, agg);
  r.cf_lambda = cf_lambda(ev.lambda_max, a.order());
  r.lambda_max = ev.lambda_max;
  r.dist_gm_euclid = d_gm.euclid_mod;
  r.dist_ev_euclid = d_ev.euclid_mod;
  r.dist_gm_cheb = d_gm.cheb;
  r.dist_ev_cheb = d_ev.cheb;
  r.rank_reversal = rank_reversal(gm, ev.solution);
  return r;
}

TrialRecord run_trial(std::size_t n, const PerturbationSpec& spec, std::uint64_t stream_key,
                      std::uint64_t trial_index, TriadAggregation agg) {
  const GeneratedInstance inst = generate_instance(n, spec, stream_key, trial_index);
  return evaluate(inst.perturbed, spec.deviation, agg);
}

void CellAccumulator::CompensatedSum::add(double v) noexcept {
  const double t = sum + v;
  if (std::abs(sum) >= std::abs(v)) {
    comp += (sum - t) + v;
  } else {
    comp += (v - t) + sum;
  }
  sum = t;
}

void CellAccumulator::CompensatedSum::merge(const CompensatedSum& o) noexcept {
  add(o.sum);
  comp += o.comp;
}

void CellAccumulator::add(const TrialRecord& r) {
  ++count_;
  sums_[kCfTriad].add(r.cf_triad);
  sums_[kCfLambda].add(r.cf_lambda);
  sums_[kGmEuclid].add(r.dist_gm_euclid);
  sums_[kEvEuclid].add(r.dist_ev_euclid);
  sums_[kGmCheb].add(r.dist_gm_cheb);
  sums_[kEvCheb].add(r.dist_ev_cheb);
  if (r.dist_gm_euclid < r.dist_ev_euclid) {
    gm_euclid_half_wins_ += 2;
  } else if (r.dist_gm_euclid == r.dist_ev_euclid) {
    gm_euclid_half_wins_ += 1;
  }
  if (r.dist_ev_cheb < r.dist_gm_cheb) {
    ev_cheb_half_wins_ += 2;
  } else if (r.dist_ev_cheb == r.dist_gm_cheb) {
    ev_cheb_half_wins_ += 1;
  }
  if (r.rank_reversal) ++reversals_;
}

void CellAccumulator::merge(const CellAccumulator& other) {
  count_ += other.count_;
  failures_ += other.failures_;
  gm_euclid_half_wins_ += other.gm_euclid_half_wins_;
  ev_cheb_half_wins_ += other.ev_cheb_half_wins_;
  reversals_ += other.reversals_;
  for (int f = 0; f < kFieldCount; ++f) sums_[f].merge(other.sums_[f]);
}

CellAggregate CellAccumulator::finalize() const {
  if (count_ == 0) throw EmptyCellError(cell_name(order_, deviation_) + " has no successful trials");
  const double n = static_cast<double>(count_);
  CellAggregate c;
  c.order = order_;
  c.deviation = deviation_;
  c.trials = count_ + failures_;
  c.failures = failures_;
  c.mean_cf_triad = sums_[kCfTriad].value() / n;
  c.mean_cf_lambda = sums_[kCfLambda].value() / n;
  c.mean_dist_gm_euclid = sums_[kGmEuclid].value() / n;
  c.mean_dist_ev_euclid = sums_[kEvEuclid].value() / n;
  c.mean_dist_gm_cheb = sums_[kGmCheb].value() / n;
  c.mean_dist_ev_cheb = sums_[kEvCheb].value() / n;
  c.diff_euclid = std::abs(c.mean_dist_gm_euclid - c.mean_dist_ev_euclid);
  c.diff_cheb = std::abs(c.mean_dist_gm_cheb - c.mean_dist_ev_cheb);
  c.wins_gm_euclid_pct = 50.0 * static_cast<double>(gm_euclid_half_wins_) / n;
  c.wins_ev_cheb_pct = 50.0 * static_cast<double>(ev_cheb_half_wins_) / n;
  c.rank_reversal_pct = 100.0 * static_cast<double>(reversals_) / n;
  return c;
}

CellAggregate aggregate(std::span<const TrialRecord> records) {
  if (records.empty()) throw EmptyCellError("cannot aggregate an empty set of trial records");
  CellAccumulator acc(records.front().order, records.front().deviation);
  for (const auto& r : records) {
    if (r.order != records.front().order || r.deviation != records.front().deviation) {
      throw ParameterError("records of one cell must share order and deviation");
    }
    acc.add(r);
  }
  return acc.finalize();
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config);

  struct Cell {
    std::size_t order;
    double deviation;
    std::uint64_t key;
  };
  std::vector<Cell> cells;
  for (std::size_t n : config.orders) {
    for (double d : config.deviations) cells.push_back({n, d, cell_stream_key(config.master_seed, n, d)});
  }

  struct Chunk {
    std::size_t cell;
    std::uint64_t begin;
    std::uint64_t end;
  };
  std::vector<Chunk> chunks;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (std::uint64_t b = 0; b < config.trials_per_cell; b += kChunkTrials) {
      chunks.push_back({c, b, std::min(config.trials_per_cell, b + kChunkTrials)});
    }
  }

  std::vector<CellAccumulator> partials(chunks.size());
  std::vector<TrialFailure> failures;
  std::mutex failure_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};
  std::exception_ptr first_error;
  std::string first_error_cell;

  auto work = [&] {
    for (std::size_t i = next++; i < chunks.size() && !aborted; i = next++) {
      const Chunk& ch = chunks[i];
      const Cell& cell = cells[ch.cell];
      const PerturbationSpec spec{cell.deviation, config.scale_max, config.base};
      CellAccumulator acc(cell.order, cell.deviation);
      try {
        for (std::uint64_t t = ch.begin; t < ch.end; ++t) {
          try {
            acc.add(run_trial(cell.order, spec, cell.key, t, config.triad_agg));
          } catch (const ConvergenceError& e) {
            acc.add_failure();
            std::lock_guard lock(failure_mutex);
            failures.push_back({cell.order, cell.deviation, t, e.residual()});
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!first_error) {
          first_error = std::current_exception();
          first_error_cell = cell_name(cell.order, cell.deviation);
        }
        aborted = true;
      }
      partials[i] = acc;
    }
  };

  const std::size_t workers = std::min(config.worker_count, std::max<std::size_t>(chunks.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  if (first_error) {
    try {
      std::rethrow_exception(first_error);
    } catch (const std::exception& e) {
      throw Error(first_error_cell + ": " + e.what());
    }
  }

  ExperimentResult result;
  std::vector<CellAccumulator> totals;
  totals.reserve(cells.size());
  for (const Cell& c : cells) totals.emplace_back(c.order, c.deviation);
  for (std::size_t i = 0; i < chunks.size(); ++i) totals[chunks[i].cell].merge(partials[i]);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    try {
      result.cells.push_back(totals[c].finalize());
    } catch (const EmptyCellError&) {
      // Every trial failed; keep the row so the failure count is visible.
      CellAggregate empty;
      empty.order = cells[c].order;
      empty.deviation = cells[c].deviation;
      empty.trials = totals[c].failures();
      empty.failures = totals[c].failures();
      empty.mean_cf_triad = empty.mean_cf_lambda = std::nan("");
      empty.mean_dist_gm_euclid = empty.mean_dist_ev_euclid = std::nan("");
      empty.mean_dist_gm_cheb = empty.mean_dist_ev_cheb = std::nan("");
      empty.diff_euclid = empty.diff_cheb = std::nan("");
      empty.wins_gm_euclid_pct = empty.wins_ev_cheb_pct = empty.rank_reversal_pct = std::nan("");
      result.cells.push_back(empty);
    }
  }

  auto cell_pos = [&](const TrialFailure& f) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].order == f.order && cells[c].deviation == f.deviation) return c;
    }
    return cells.size();
  };
  std::sort(failures.begin(), failures.end(), [&](const TrialFailure& a, const TrialFailure& b) {
    const auto ca = cell_pos(a);
    const auto cb = cell_pos(b);
    return ca != cb ? ca < cb : a.trial_index < b.trial_index;
  });
  result.failures = std::move(failures);
  return result;
}

}  // namespace pcmc
