#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tverberg/rational.hpp"

namespace tverberg {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,          // unreadable/unwritable file or malformed config
  kExitUsage = 2,       // bad flags, malformed partition, refused size
  kExitDegenerate = 3,  // a Tverberg partition had sign 0 or a degenerate witness
  kExitFailure = 4,     // a theorem or identity check failed
};

/// Runs `tverberg <args...>` (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class ExperimentKind { Random, SierksmaExact, SierksmaPerturbed };

std::string to_string(ExperimentKind kind);

struct ExperimentSpec {
  int q = 3;
  int d = 2;
  int trials = 1;
  std::uint64_t seed = 0;
  ExperimentKind kind = ExperimentKind::Random;
  Rational eps = make_rational(1, 1 << 16);
  long resolution = 1L << 10;
  bool prune = false;
  int jobs = 1;
  /// Fresh configurations tried per trial before giving up on it.
  int max_attempts = 100;
  bool allow_large = false;
};

/// Seed of attempt `attempt` of trial `trial`, mixed with std::seed_seq.
std::uint64_t trial_seed(std::uint64_t base, int trial, int attempt);

/// Runs the trials in order, handing each JSON-lines record to `on_trial`;
/// stops early when `on_trial` returns false. Records are
/// {"trial", "attempts", "resamples", "kind", "seed", "variant", "report"}.
/// Non-generic or degenerate configurations are resampled; a trial that is
/// still degenerate after `max_attempts` is kept and marked degenerate.
void run_experiment(const ExperimentSpec& spec, const std::function<bool(const nlohmann::json&)>& on_trial);

/// Aggregate over trial records: trial count, resamples, count min/max/mean
/// and histogram, theorem failures among non-degenerate trials, degenerate
/// trials.
nlohmann::json summarize_trials(const std::vector<nlohmann::json>& records);

}  // namespace tverberg
