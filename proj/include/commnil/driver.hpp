#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commnil/perm_group.hpp"
#include "commnil/words.hpp"

namespace commnil {

struct RunOptions {
  /// Builtin ids or descriptor paths; when empty, `filter` selects builtins.
  std::vector<std::string> groups;
  std::string filter = "all";
  std::vector<std::size_t> ks{1, 2, 3};
  WordKind kind = WordKind::delta;
  std::uint64_t cap = kDefaultCap;
  std::uint64_t seed = 0;
  /// Treat hypothesis_not_satisfied outcomes as failures.
  bool strict = false;
  /// Include per-check wall time in the report (breaks byte-identity).
  bool timing = false;
  std::size_t jobs = 1;
  /// Random commutator-closed generating sets per group (xclo command).
  std::size_t samples = 50;
};

enum ExitCode : int { kExitOk = 0, kExitInconsistent = 1, kExitUsage = 2 };

struct RunResult {
  nlohmann::json report;
  int exit_code = kExitOk;
  /// One human-readable line per group.
  std::vector<std::string> summary;
  /// Lines that must be surfaced loudly (inconsistencies, probe candidates).
  std::vector<std::string> alerts;
};

// Batch drivers. Each selects groups, runs its checks per group (on up to
// `jobs` worker threads), and assembles a report whose group entries are in
// selection order regardless of scheduling.
RunResult cmd_theorem(const RunOptions &options);
RunResult cmd_focal(const RunOptions &options);
RunResult cmd_lemmas(const RunOptions &options);
RunResult cmd_xclo(const RunOptions &options);
RunResult cmd_probe(const RunOptions &options);
RunResult cmd_series(const RunOptions &options);

/// Dispatch by subcommand name; throws GroupError for unknown names.
RunResult run_command(const std::string &name, const RunOptions &options);

} // namespace commnil
