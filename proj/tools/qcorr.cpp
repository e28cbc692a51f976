// Command-line front end for two-qubit correlation analysis.

#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "qcorr/cli/commands.hpp"

namespace {

using namespace qcorr;
using namespace qcorr::cli;

void add_common(CLI::App* cmd, CommonOptions& opts, std::string& side, std::string& format,
                std::string& grid) {
  cmd->add_option("--side", side, "side whose discord drives the verdict")
      ->check(CLI::IsMember({"A", "B"}));
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "structured"}));
  cmd->add_option("--rank-tol", opts.analysis.rank_tol, "relative singular-value cutoff for ranks");
  cmd->add_option("--disc-tol", opts.analysis.disc_tol, "discord below this is treated as zero");
  cmd->add_option("--grid", grid, "optimizer coarse grid, POLARxAZIMUTHAL (e.g. 32x64)");
  cmd->add_option("--refine", opts.analysis.optimizer.refine_iters, "optimizer refinement iterations");
  cmd->add_option("--protocol-targets", opts.analysis.protocol_targets,
                  "also run the reconstructed RSP protocol over this many targets");
}

bool finish_common(CommonOptions& opts, const std::string& side, const std::string& format,
                   const std::string& grid) {
  opts.analysis.side = side == "A" ? Side::A : Side::B;
  opts.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Table;
  if (!grid.empty()) {
    static const std::regex pattern(R"((\d+)[xX](\d+))");
    std::smatch m;
    if (!std::regex_match(grid, m, pattern)) {
      std::cerr << "error: --grid expects POLARxAZIMUTHAL\n";
      return false;
    }
    opts.analysis.optimizer.polar = std::stoi(m[1]);
    opts.analysis.optimizer.azimuthal = std::stoi(m[2]);
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit quantum correlation analysis: discord, correlation rank, RSP fidelity"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string side = "B";
  std::string format = "table";
  std::string grid;

  std::string analyze_state;
  auto* analyze = app.add_subcommand("analyze", "full report for one state");
  analyze->add_option("state", analyze_state, "state file, or ref:<name>")->required();
  add_common(analyze, opts, side, format, grid);

  ReproduceCommand repro;
  double repro_tol = 0.0;
  auto* reproduce = app.add_subcommand("reproduce", "run the worked-example reproduction table");
  reproduce->add_flag("--list", repro.list_only, "print row ids without running");
  auto* tol_opt = reproduce->add_option("--tol", repro_tol, "override every row tolerance");
  reproduce->add_option("--only", repro.options.only, "run only these row ids");
  add_common(reproduce, opts, side, format, grid);

  ChannelCommand channel;
  auto* chan = app.add_subcommand("channel", "apply a local channel and compare before/after");
  chan->add_option("state", channel.state, "state file, or ref:<name>")->required();
  chan->add_option("--a", channel.channel_a, "channel on A: builtin[:param] or Kraus file");
  chan->add_option("--b", channel.channel_b, "channel on B: builtin[:param] or Kraus file");
  chan->add_option("-o,--out", channel.output_file, "write the output state here");
  add_common(chan, opts, side, format, grid);

  SigmaFamilyCommand family;
  std::vector<double> diag;
  auto* fam = app.add_subcommand("sigma-family", "build and analyze a member of the L_R = 3, F = 0 family");
  fam->add_option("--diag", diag, "rho11 rho22 rho33 rho44")->expected(4)->required();
  fam->add_option("--c", family.spec.c, "common off-diagonal value")->required();
  fam->add_option("-o,--out", family.output_file, "write the state here");
  add_common(fam, opts, side, format, grid);

  BatchCommand batch;
  auto* bat = app.add_subcommand("batch", "analyze a stream of random states");
  bat->add_option("--seed", batch.seed, "random seed");
  bat->add_option("--count", batch.count, "number of states")->check(CLI::PositiveNumber);
  bat->add_option("--rank", batch.rank, "Ginibre rank 1..4")->check(CLI::Range(1, 4));
  bat->add_option("--channel", batch.channel, "channel for both sides: builtin[:param], file, or random");
  add_common(bat, opts, side, format, grid);

  CLI11_PARSE(app, argc, argv);
  if (!finish_common(opts, side, format, grid)) return kExitParseError;

  if (*analyze) return cmd_analyze(analyze_state, opts, std::cout, std::cerr);
  if (*reproduce) {
    if (*tol_opt) repro.options.tol = repro_tol;
    return cmd_reproduce(repro, opts, std::cout, std::cerr);
  }
  if (*chan) return cmd_channel(channel, opts, std::cout, std::cerr);
  if (*fam) {
    std::copy(diag.begin(), diag.end(), family.spec.diagonal.begin());
    return cmd_sigma_family(family, opts, std::cout, std::cerr);
  }
  return cmd_batch(batch, opts, std::cout, std::cerr);
}
