#include "pcmc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "pcmc/philox.hpp"

namespace pcmc::cli {
namespace {

std::size_t parse_worker_env(const std::string& text) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value == 0) {
    throw UsageError("PCMC_WORKERS must be a positive integer, got '" + text + "'");
  }
  return value;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += format_real(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

Options parse_args(std::span<const std::string> args, std::optional<std::string> env_workers) {
  Options opt;
  ExperimentConfig& cfg = opt.config;

  CLI::App app{"Monte Carlo comparison of the geometric-means and eigenvector solutions of "
               "pairwise comparison matrices",
               "pcmc"};
  app.set_version_flag("--version", kVersion);

  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::string triad_agg = "max";
  std::string base = "uniform";
  std::string format = "csv";

  app.add_option("--orders", cfg.orders, "Matrix orders, comma separated (3..7)")
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{3}, kMaxOrder));
  app.add_option("--deviations", cfg.deviations, "Deviations D, comma separated, each in [0, 1)")
      ->delimiter(',');
  app.add_option("--trials", cfg.trials_per_cell, "Trials per (order, D) cell")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Master seed; generated and reported when omitted");
  app.add_option("--scale-max", cfg.scale_max, "Scale maximum M bounding the base weights (> 1)");
  app.add_option("--workers", workers, "Worker threads (overrides PCMC_WORKERS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--triad-agg", triad_agg, "Triad aggregation")->check(CLI::IsMember({"max", "mean"}));
  app.add_option("--base-dist", base, "Base weight distribution: uniform on [1,M] or "
                                      "log-uniform on [1/M,M]")
      ->check(CLI::IsMember({"uniform", "log-uniform"}));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "table"}));
  app.add_option("--output", opt.output, "Output path, or - for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw InfoRequested(app.help());
  } catch (const CLI::CallForVersion&) {
    throw InfoRequested(std::string(kVersion) + "\n");
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\nRun with --help for usage.");
  }

  try {
    cfg.triad_agg = parse_triad_aggregation(triad_agg);
    cfg.base = parse_base_distribution(base);
    opt.format = format == "table" ? OutputFormat::table : OutputFormat::csv;
    if (seed) {
      cfg.master_seed = *seed;
    } else {
      cfg.master_seed = fresh_seed();
      opt.seed_generated = true;
    }
    if (workers) {
      cfg.worker_count = *workers;
    } else if (env_workers) {
      cfg.worker_count = parse_worker_env(*env_workers);
    } else {
      cfg.worker_count = std::max(1u, std::thread::hardware_concurrency());
    }
    validate(cfg);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return opt;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::string metadata_line(const ExperimentConfig& config) {
  std::ostringstream os;
  os << "# pcmc " << kVersion << " seed=" << config.master_seed << " orders=" << join(config.orders)
     << " deviations=" << join(config.deviations) << " trials=" << config.trials_per_cell
     << " scale_max=" << format_real(config.scale_max) << " triad_agg=" << to_string(config.triad_agg)
     << " base_dist=" << to_string(config.base) << " rng=" << Philox4x32::name();
  return os.str();
}

void write_csv(std::ostream& out, std::span<const CellAggregate> cells, std::uint64_t seed) {
  out << kCsvHeader << '\n';
  for (const auto& c : cells) {
    out << c.order << ',' << format_real(c.deviation) << ',' << c.trials << ','
        << format_real(c.mean_cf_triad) << ',' << format_real(c.mean_cf_lambda) << ','
        << format_real(c.mean_dist_gm_euclid) << ',' << format_real(c.mean_dist_ev_euclid) << ','
        << format_real(c.diff_euclid) << ',' << format_real(c.wins_gm_euclid_pct) << ','
        << format_real(c.mean_dist_gm_cheb) << ',' << format_real(c.mean_dist_ev_cheb) << ','
        << format_real(c.diff_cheb) << ',' << format_real(c.wins_ev_cheb_pct) << ','
        << format_real(c.rank_reversal_pct) << ',' << seed << '\n';
  }
}

// Grid layout: the dist columns show the winning method's mean (GM for the
// Euclidean metric, EV for the Tchebychev metric).
void write_table(std::ostream& out, std::span<const CellAggregate> cells,
                 const ExperimentConfig& config) {
  char line[256];
  out << metadata_line(config) << '\n';
  const char* rule =
      "-----------+-----------------+---------------------------+---------------------------+-------\n";
  out << "           |       cf        |     Euclidean metric      |     Tchebychev metric     |\n";
  std::snprintf(line, sizeof line, " %3s %5s | %6s  %6s  | %7s  %7s  %7s | %7s  %7s  %7s | %5s\n", "Ord", "D",
                "triad", "lambda", "dist", "diff", "wins1", "dist", "diff", "wins2", "rev%");
  out << line << rule;
  std::size_t previous_order = 0;
  for (const auto& c : cells) {
    const std::string ord = c.order != previous_order ? std::to_string(c.order) : "";
    if (c.order != previous_order && previous_order != 0) {
      out << rule;
    }
    previous_order = c.order;
    std::snprintf(line, sizeof line,
                  " %3s %5s | %6s  %6s  | %7s  %7s  %6s%% | %7s  %7s  %6s%% | %5s\n", ord.c_str(),
                  fixed(c.deviation, 2).c_str(), fixed(c.mean_cf_triad, 3).c_str(),
                  fixed(c.mean_cf_lambda, 3).c_str(), fixed(c.mean_dist_gm_euclid, 4).c_str(),
                  fixed(c.diff_euclid, 5).c_str(), fixed(c.wins_gm_euclid_pct, 1).c_str(),
                  fixed(c.mean_dist_ev_cheb, 4).c_str(), fixed(c.diff_cheb, 5).c_str(),
                  fixed(c.wins_ev_cheb_pct, 1).c_str(), fixed(c.rank_reversal_pct, 2).c_str());
    out << line;
  }
  out << "wins1: GM beats EV (Euclidean); wins2: EV beats GM (Tchebychev); rev%: rank reversals.\n"
         "cf lambda omits the random-index divisor; divide by a published value if needed.\n";
}

int emit(std::span<const CellAggregate> cells, const Options& options, std::ostream& out,
         std::ostream& err) {
  const bool to_stdout = options.output == "-" || options.output == "stdout";
  std::ofstream file;
  if (!to_stdout) {
    file.open(options.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "pcmc: cannot open '" << options.output << "' for writing\n";
      return kExitIo;
    }
  }
  std::ostream& dest = to_stdout ? out : file;
  if (options.format == OutputFormat::csv) {
    write_csv(dest, cells, options.config.master_seed);
  } else {
    write_table(dest, cells, options.config);
  }
  dest.flush();
  if (!dest) {
    err << "pcmc: failed writing results to '" << options.output << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int run(std::span<const std::string> args, std::optional<std::string> env_workers,
        std::ostream& out, std::ostream& err) {
  Options options;
  try {
    options = parse_args(args, std::move(env_workers));
  } catch (const InfoRequested& info) {
    out << info.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "pcmc: " << e.what() << '\n';
    return kExitUsage;
  }

  err << metadata_line(options.config) << (options.seed_generated ? " (seed generated)" : "")
      << '\n';

  ExperimentResult result;
  try {
    result = run_experiment(options.config);
  } catch (const Error& e) {
    err << "pcmc: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& f : result.failures) {
    err << "pcmc: EV did not converge: order " << f.order << " D " << format_real(f.deviation)
        << " trial " << f.trial_index << " residual " << format_real(f.residual) << '\n';
  }
  std::uint64_t failures = 0;
  for (const auto& c : result.cells) failures += c.failures;

  const int status = emit(result.cells, options, out, err);
  if (status != kExitOk) return status;
  if (failures > 0) {
    err << "pcmc: " << failures << " trial(s) failed\n";
    return kExitSolverFailures;
  }
  return kExitOk;
}

}  // namespace pcmc::cli
