#include <filesystem>
#include <sstream>

#include "qcorr/cli/commands.hpp"
#include "qcorr/cli/state_io.hpp"
#include "qcorr/error.hpp"
#include "test_support.hpp"

using namespace qcorr;
using namespace qcorr::cli;
using qcorr::test::max_abs_diff;

namespace {

const std::string kData = QCORR_DATA_DIR;

CommonOptions structured() {
  CommonOptions o;
  o.format = OutputFormat::Structured;
  return o;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Run run(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("analyze sigma") {
  const Run r = run([](auto& o, auto& e) { return cmd_analyze(kData + "/sigma.state", structured(), o, e); });
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["l_r"] == 3);
  CHECK(j["l_t"] == 1);
  CHECK(j["rsp"]["fidelity"].get<double>() < 1e-12);
  CHECK(j["verdict"]["kind"] == "GenuinelyQuantum");
  CHECK(j["discord"]["B"]["discord"].get<double>() == doctest::Approx(0.026).epsilon(0.12));
  CHECK(j["geometric_discord"]["B"].get<double>() == doctest::Approx(0.01));

  const Run table = run([](auto& o, auto& e) { return cmd_analyze("ref:sigma", CommonOptions{}, o, e); });
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("GenuinelyQuantum") != std::string::npos);
  CHECK(table.out.find("L_R                 3") != std::string::npos);
}

TEST_CASE("analyze rho_cl") {
  const Run r = run([](auto& o, auto& e) { return cmd_analyze(kData + "/rho_cl.state", structured(), o, e); });
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"]["kind"] == "Classical");
  CHECK(j["discord"]["B"]["discord"].get<double>() < 1e-12);
}

TEST_CASE("analyze exit codes") {
  CHECK(run([](auto& o, auto& e) { return cmd_analyze(kData + "/malformed.state", {}, o, e); }).code ==
        kExitParseError);
  CHECK(run([](auto& o, auto& e) { return cmd_analyze("/nonexistent", {}, o, e); }).code == kExitParseError);
  const auto bad = temp_path("qcorr_bad.state");
  write_text_file(bad, "[[1.5,0,0,0],[0,-0.5,0,0],[0,0,0,0],[0,0,0,0]]");
  const Run r = run([&](auto& o, auto& e) { return cmd_analyze(bad, {}, o, e); });
  CHECK(r.code == kExitInvalidState);
  CHECK(r.err.find("NotPositive") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("reports are self-consistent") {
  for (const char* name : {"rho_cl", "rho_tilde", "sigma", "bell_phi_plus", "product_plus"}) {
    const AnalysisReport r = analyze(reference_state(name));
    CHECK(self_consistent(r));
  }
  AnalysisReport r = analyze(reference_state("sigma"));
  r.verdict.kind = Quantumness::Classical;
  CHECK_FALSE(self_consistent(r));
}

TEST_CASE("reproduce list and tolerance override") {
  ReproduceCommand list;
  list.list_only = true;
  const Run l = run([&](auto& o, auto& e) { return cmd_reproduce(list, {}, o, e); });
  CHECK(l.code == kExitOk);
  CHECK(l.out.find("1a-sigma-discord") != std::string::npos);
  CHECK(l.out.find("PASS") == std::string::npos);

  ReproduceCommand tight;
  tight.options.tol = 1e-15;
  tight.options.only = {"1a-sigma-discord"};
  const Run t = run([&](auto& o, auto& e) { return cmd_reproduce(tight, {}, o, e); });
  CHECK(t.code == kExitReproductionFailure);
  CHECK(t.out.find("FAIL") != std::string::npos);

  ReproduceCommand quick;
  quick.options.only = {"2-sigma-geometric", "3c-ranks-sigma"};
  const Run q = run([&](auto& o, auto& e) { return cmd_reproduce(quick, structured(), o, e); });
  CHECK(q.code == kExitOk);
  const auto j = nlohmann::json::parse(q.out);
  CHECK(j["rows"].size() == 2);
  CHECK(j["all_passed"] == true);
}

TEST_CASE("channel command: Phi on rho_cl") {
  ChannelCommand cmd;
  cmd.state = kData + "/rho_cl.state";
  cmd.channel_a = "zero_plus";
  cmd.channel_b = kData + "/zero_plus.kraus";
  cmd.output_file = temp_path("qcorr_tilde.state");
  const Run r = run([&](auto& o, auto& e) { return cmd_channel(cmd, structured(), o, e); });
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["before"]["l_t"] == 1);
  CHECK(j["after"]["l_t"] == 2);
  CHECK(j["delta"]["l_t"] == 1);
  CHECK(j["delta"]["l_r"] == 0);
  CHECK(j["delta"]["fidelity"].get<double>() == doctest::Approx(0.125));
  const ComplexMatrix written = read_state_file(*cmd.output_file);
  CHECK(max_abs_diff(written, reference_state("rho_tilde").matrix()) < 1e-12);
  std::filesystem::remove(*cmd.output_file);
}

TEST_CASE("channel command: identity gives zero deltas") {
  ChannelCommand cmd;
  cmd.state = "ref:sigma";
  const Run r = run([&](auto& o, auto& e) { return cmd_channel(cmd, structured(), o, e); });
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"l_r", "l_t", "discord", "geometric_discord", "fidelity"}) {
    CHECK(std::abs(j["delta"][key].get<double>()) < 1e-12);
  }
}

TEST_CASE("channel command: full depolarization and annihilation") {
  ChannelCommand cmd;
  cmd.state = kData + "/bell_phi_plus.state";
  cmd.channel_a = cmd.channel_b = "depolarizing:1";
  const Run r = run([&](auto& o, auto& e) { return cmd_channel(cmd, structured(), o, e); });
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  const ComplexMatrix out = matrix_from_json(j["output_state"], 4, 4);
  CHECK(max_abs_diff(out, Mat4c(Mat4c::Identity() / 4.0)) < 1e-15);

  // Filtering A onto |0> annihilates |11>.
  const auto filter = temp_path("qcorr_filter.json");
  write_text_file(filter, R"({"kraus": [[[1, 0], [0, 0]]]})");
  ChannelCommand annihilate;
  annihilate.state = temp_path("qcorr_11.state");
  write_text_file(annihilate.state, "[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,1]]");
  annihilate.channel_a = filter;
  const Run a = run([&](auto& o, auto& e) { return cmd_channel(annihilate, {}, o, e); });
  CHECK(a.code == kExitAnnihilated);
  std::filesystem::remove(filter);
  std::filesystem::remove(annihilate.state);
}

TEST_CASE("sigma-family command") {
  SigmaFamilyCommand cmd;
  cmd.spec = {{0.2, 0.1, 0.3, 0.4}, 0.1};
  Run r = run([&](auto& o, auto& e) { return cmd_sigma_family(cmd, structured(), o, e); });
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(max_abs_diff(matrix_from_json(j["state"], 4, 4), sigma_matrix()) < 1e-15);

  cmd.spec = {{0.1, 0.2, 0.3, 0.4}, 0.0};  // wrong diagonal relation
  CHECK(run([&](auto& o, auto& e) { return cmd_sigma_family(cmd, {}, o, e); }).code == kExitInvalidState);

  cmd.spec = {{0.4, 0.1, 0.1, 0.4}, 0.0};
  r = run([&](auto& o, auto& e) { return cmd_sigma_family(cmd, structured(), o, e); });
  REQUIRE(r.code == kExitOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["discord"]["B"]["discord"].get<double>() < 1e-12);
  CHECK(j["verdict"]["kind"] == "Classical");

  cmd.spec = {{0.25, 0.25, 0.25, 0.25}, 0.05};
  r = run([&](auto& o, auto& e) { return cmd_sigma_family(cmd, structured(), o, e); });
  REQUIRE(r.code == kExitOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["rsp"]["fidelity"].get<double>() < 1e-12);
  CHECK(j["discord"]["B"]["discord"].get<double>() > 0.0);

  cmd.spec = {{0.25, 0.25, 0.25, 0.25}, 0.3};  // not positive
  r = run([&](auto& o, auto& e) { return cmd_sigma_family(cmd, {}, o, e); });
  CHECK(r.code == kExitInvalidState);
  CHECK(r.err.find("NotPositive") != std::string::npos);
}

TEST_CASE("batch command") {
  BatchCommand cmd;
  cmd.seed = 7;
  cmd.count = 100;
  cmd.rank = 4;
  cmd.channel = "random";
  const Run a = run([&](auto& o, auto& e) { return cmd_batch(cmd, structured(), o, e); });
  REQUIRE(a.code == kExitOk);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["rows"].size() == 200);
  CHECK(j["summary"]["monotonicity_violations"] == 0);

  const Run b = run([&](auto& o, auto& e) { return cmd_batch(cmd, structured(), o, e); });
  CHECK(a.out == b.out);

  BatchCommand pure;
  pure.count = 1;
  pure.rank = 1;
  const Run p = run([&](auto& o, auto& e) { return cmd_batch(pure, structured(), o, e); });
  const auto row = nlohmann::json::parse(p.out)["rows"][0];
  CHECK(std::abs(row["discord"].get<double>() - row["entropy_a"].get<double>()) < 1e-4);

  const Run t = run([&](auto& o, auto& e) { return cmd_batch(pure, {}, o, e); });
  CHECK(t.out.find("# summary count 1") != std::string::npos);

  pure.count = 0;
  CHECK(run([&](auto& o, auto& e) { return cmd_batch(pure, {}, o, e); }).code == kExitInvalidState);
}
