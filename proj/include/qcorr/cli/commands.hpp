#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qcorr/cli/report.hpp"
#include "qcorr/cli/reproduce.hpp"

namespace qcorr::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitReproductionFailure = 1,
  kExitInvalidState = 2,
  kExitParseError = 3,
  kExitAnnihilated = 4,
};

enum class OutputFormat { Table, Structured };

struct CommonOptions {
  AnalysisOptions analysis;
  OutputFormat format = OutputFormat::Table;
};

/// State argument: a state file path or ref:<name>.
int cmd_analyze(const std::string& state, const CommonOptions& options, std::ostream& out,
                std::ostream& err);

struct ReproduceCommand {
  ReproduceOptions options;
  bool list_only = false;
};
int cmd_reproduce(const ReproduceCommand& cmd, const CommonOptions& options, std::ostream& out,
                  std::ostream& err);

struct ChannelCommand {
  std::string state;
  std::string channel_a = "identity";
  std::string channel_b = "identity";
  std::optional<std::string> output_file;
};
int cmd_channel(const ChannelCommand& cmd, const CommonOptions& options, std::ostream& out,
                std::ostream& err);

struct SigmaFamilyCommand {
  SigmaFamilySpec spec;
  std::optional<std::string> output_file;
};
int cmd_sigma_family(const SigmaFamilyCommand& cmd, const CommonOptions& options, std::ostream& out,
                     std::ostream& err);

struct BatchCommand {
  std::uint64_t seed = 1;
  int count = 10;
  int rank = 4;
  /// Channel applied to both sides of every state; "random" draws a fresh
  /// random CPTP channel per side and state.
  std::optional<std::string> channel;
};
int cmd_batch(const BatchCommand& cmd, const CommonOptions& options, std::ostream& out,
              std::ostream& err);

/// Maps library errors onto the exit-code contract.
int exit_code_for(const std::exception& e);

}  // namespace qcorr::cli
