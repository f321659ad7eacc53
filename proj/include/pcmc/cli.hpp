#pragma once

// Batch front end: flag parsing, CSV / Table-1 style rendering, and the
// run driver shared by the `pcmc` executable and the tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcmc/errors.hpp"
#include "pcmc/montecarlo.hpp"

namespace pcmc::cli {

inline constexpr const char* kVersion = "1.0.0";

inline constexpr const char* kCsvHeader =
    "order,D,trials,cf_triad,cf_lambda,dist_gm_euclid,dist_ev_euclid,diff_euclid,"
    "wins_gm_euclid_pct,dist_gm_cheb,dist_ev_cheb,diff_cheb,wins_ev_cheb_pct,"
    "rank_reversal_pct,seed";

enum class OutputFormat { csv, table };

/// Exit statuses of run().
enum ExitStatus : int {
  kExitOk = 0,
  kExitSolverFailures = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// --help / --version; carries the text to print.
class InfoRequested : public Error {
 public:
  using Error::Error;
};

struct Options {
  ExperimentConfig config;
  OutputFormat format = OutputFormat::csv;
  std::string output = "-";
  bool seed_generated = false;
};

/// Parses flags (args excludes the program name). `env_workers` is the value
/// of PCMC_WORKERS, if set; the --workers flag wins over it. Throws
/// UsageError or InfoRequested.
Options parse_args(std::span<const std::string> args,
                   std::optional<std::string> env_workers = std::nullopt);

/// Shortest decimal string that parses back to the same double.
std::string format_real(double v);

/// One-line run description sufficient to reproduce the run.
std::string metadata_line(const ExperimentConfig& config);

void write_csv(std::ostream& out, std::span<const CellAggregate> cells, std::uint64_t seed);
void write_table(std::ostream& out, std::span<const CellAggregate> cells,
                 const ExperimentConfig& config);

/// Writes results to `destination` ("-" or "stdout" for `out`). Returns
/// kExitIo when the destination cannot be written.
int emit(std::span<const CellAggregate> cells, const Options& options, std::ostream& out,
         std::ostream& err);

/// Full driver: parse, run, emit. Diagnostics and metadata go to `err`.
int run(std::span<const std::string> args, std::optional<std::string> env_workers,
        std::ostream& out, std::ostream& err);

}  // namespace pcmc::cli
