#include "qcorr/cli/commands.hpp"

#include <iomanip>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/cli/state_io.hpp"
#include "qcorr/error.hpp"
#include "qcorr/random.hpp"

namespace qcorr::cli {

int exit_code_for(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  if (err == nullptr) return kExitParseError;
  switch (err->code()) {
    case Errc::ParseError:
    case Errc::UnknownName:
    case Errc::ShapeMismatch:
      return kExitParseError;
    case Errc::Annihilated:
      return kExitAnnihilated;
    default:
      return kExitInvalidState;
  }
}

namespace {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

void emit(std::ostream& out, const AnalysisReport& r, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    out << to_json(r).dump(2) << '\n';
  } else {
    write_table(out, r);
  }
}

nlohmann::json delta_json(const AnalysisReport& before, const AnalysisReport& after, Side side) {
  return {{"l_r", after.l_r - before.l_r},
          {"l_t", after.l_t - before.l_t},
          {"discord", after.discord(side).discord - before.discord(side).discord},
          {"geometric_discord", after.geometric(side) - before.geometric(side)},
          {"fidelity", after.rsp.fidelity - before.rsp.fidelity}};
}

}  // namespace

int cmd_analyze(const std::string& state, const CommonOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix m = load_state_argument(state);
    const DensityMatrix rho = validate_density(m, options.analysis.tolerances);
    emit(out, analyze(rho, options.analysis), options.format);
    return static_cast<int>(kExitOk);
  });
}

int cmd_reproduce(const ReproduceCommand& cmd, const CommonOptions& options, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    if (cmd.list_only) {
      for (const auto& r : list_reproduction_rows()) {
        out << std::left << std::setw(26) << r.id << r.reference << '\n';
      }
      return static_cast<int>(kExitOk);
    }
    const auto rows = run_reproduction(cmd.options);
    bool all = true;
    for (const auto& r : rows) all = all && r.passed;
    if (options.format == OutputFormat::Structured) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) {
        j.push_back({{"id", r.id},
                     {"reference", r.reference},
                     {"passed", r.passed},
                     {"asserted", r.asserted},
                     {"detail", r.detail}});
      }
      out << nlohmann::json{{"rows", j}, {"all_passed", all}}.dump(2) << '\n';
    } else {
      for (const auto& r : rows) {
        const char* status = !r.asserted ? "INFO" : (r.passed ? "PASS" : "FAIL");
        out << std::left << std::setw(6) << status << std::setw(26) << r.id << r.reference << '\n'
            << "      " << r.detail << '\n';
      }
      out << (all ? "all rows passed" : "some rows FAILED") << '\n';
    }
    return static_cast<int>(all ? kExitOk : kExitReproductionFailure);
  });
}

int cmd_channel(const ChannelCommand& cmd, const CommonOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const DensityMatrix rho = validate_density(load_state_argument(cmd.state), options.analysis.tolerances);
    const LocalProductMap map{parse_channel_spec(cmd.channel_a), parse_channel_spec(cmd.channel_b)};
    const CptpCheck ca = validate_cptp(map.a);
    const CptpCheck cb = validate_cptp(map.b);
    const DensityMatrix result = apply_local(rho, map);
    if (cmd.output_file) write_text_file(*cmd.output_file, format_matrix(result.matrix()));

    const AnalysisReport before = analyze(rho, options.analysis);
    const AnalysisReport after = analyze(result, options.analysis);
    const Side side = options.analysis.side;
    if (options.format == OutputFormat::Structured) {
      const nlohmann::json j{
          {"channel_a", {{"spec", cmd.channel_a}, {"cptp", ca.cptp}, {"defect", ca.defect}}},
          {"channel_b", {{"spec", cmd.channel_b}, {"cptp", cb.cptp}, {"defect", cb.defect}}},
          {"output_state", matrix_to_json(result.matrix())},
          {"before", to_json(before)},
          {"after", to_json(after)},
          {"delta", delta_json(before, after, side)}};
      out << j.dump(2) << '\n';
      return static_cast<int>(kExitOk);
    }
    out << "channel A: " << cmd.channel_a << (ca.cptp ? "" : "  (not trace preserving, output renormalized)")
        << '\n';
    out << "channel B: " << cmd.channel_b << (cb.cptp ? "" : "  (not trace preserving, output renormalized)")
        << '\n';
    out << "output state\n" << format_matrix(result.matrix());
    out << std::left << std::setw(20) << "quantity" << std::setw(16) << "before" << std::setw(16) << "after"
        << "delta\n";
    auto line = [&](const char* name, double b, double a) {
      out << std::setw(20) << name << std::setw(16) << b << std::setw(16) << a << (a - b) << '\n';
    };
    line("L_R", before.l_r, after.l_r);
    line("L_T", before.l_t, after.l_t);
    line("discord", before.discord(side).discord, after.discord(side).discord);
    line("geometric discord", before.geometric(side), after.geometric(side));
    line("RSP fidelity", before.rsp.fidelity, after.rsp.fidelity);
    out << std::setw(20) << "verdict" << std::setw(16) << to_string(before.verdict.kind)
        << to_string(after.verdict.kind) << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_sigma_family(const SigmaFamilyCommand& cmd, const CommonOptions& options, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    const DensityMatrix rho = sigma_family_member(cmd.spec);
    const AnalysisReport r = analyze(rho, options.analysis);
    if (r.l_t > 1 || r.rsp.fidelity > 1e-8) {
      throw Error(Errc::InternalConsistency, "family member with L_T > 1 or F > 0");
    }
    if (cmd.output_file) write_text_file(*cmd.output_file, format_matrix(rho.matrix()));
    if (options.format == OutputFormat::Table) out << "family member\n" << format_matrix(rho.matrix());
    emit(out, r, options.format);
    return static_cast<int>(kExitOk);
  });
}

int cmd_batch(const BatchCommand& cmd, const CommonOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (cmd.count < 1) throw Error(Errc::ParamOutOfRange, "count must be >= 1");
    const bool random_channel_mode = cmd.channel && *cmd.channel == "random";
    std::optional<KrausChannel> fixed;
    if (cmd.channel && !random_channel_mode) fixed = parse_channel_spec(*cmd.channel);

    const Side side = options.analysis.side;
    const bool json = options.format == OutputFormat::Structured;
    Rng rng(cmd.seed);
    std::uniform_int_distribution<int> kraus(1, 4);
    nlohmann::json rows = nlohmann::json::array();
    int violations = 0;
    double sum_discord = 0.0;
    double sum_fidelity = 0.0;

    out << std::setprecision(8);
    if (!json) {
      out << "# index stage L_R L_T discord geometric fidelity S_A verdict\n";
    }
    auto emit_row = [&](int index, const char* stage, const DensityMatrix& rho, const AnalysisReport& r) {
      const double sa = von_neumann_entropy(partial_trace(rho, Side::A));
      if (json) {
        rows.push_back({{"index", index},
                        {"stage", stage},
                        {"l_r", r.l_r},
                        {"l_t", r.l_t},
                        {"discord", r.discord(side).discord},
                        {"geometric_discord", r.geometric(side)},
                        {"fidelity", r.rsp.fidelity},
                        {"entropy_a", sa},
                        {"verdict", to_string(r.verdict.kind)}});
      } else {
        out << index << ' ' << stage << ' ' << r.l_r << ' ' << r.l_t << ' ' << r.discord(side).discord << ' '
            << r.geometric(side) << ' ' << r.rsp.fidelity << ' ' << sa << ' ' << to_string(r.verdict.kind)
            << '\n';
      }
    };

    for (int i = 0; i < cmd.count; ++i) {
      const DensityMatrix rho = random_density(rng, cmd.rank);
      const AnalysisReport r = analyze(rho, options.analysis);
      sum_discord += r.discord(side).discord;
      sum_fidelity += r.rsp.fidelity;
      emit_row(i, "input", rho, r);
      if (cmd.channel) {
        LocalProductMap map;
        if (random_channel_mode) {
          map.a = random_channel(rng, kraus(rng));
          map.b = random_channel(rng, kraus(rng));
        } else {
          map = {*fixed, *fixed};
        }
        const DensityMatrix after = apply_local(rho, map);
        const AnalysisReport ra = analyze(after, options.analysis);
        if (ra.l_r > r.l_r) ++violations;
        emit_row(i, "channel", after, ra);
      }
    }

    const double n = cmd.count;
    if (json) {
      out << nlohmann::json{{"rows", rows},
                            {"summary",
                             {{"count", cmd.count},
                              {"seed", cmd.seed},
                              {"rank", cmd.rank},
                              {"monotonicity_violations", violations},
                              {"mean_discord", sum_discord / n},
                              {"mean_fidelity", sum_fidelity / n}}}}
                 .dump(2)
          << '\n';
    } else {
      out << "# summary count " << cmd.count << " seed " << cmd.seed << " rank " << cmd.rank
          << " monotonicity_violations " << violations << " mean_discord " << sum_discord / n
          << " mean_fidelity " << sum_fidelity / n << '\n';
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace qcorr::cli
