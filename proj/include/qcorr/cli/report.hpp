#pragma once

#include <array>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/bloch.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/rsp.hpp"
#include "qcorr/state.hpp"

namespace qcorr::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisOptions {
  Side side = Side::B;  ///< side whose discord drives the verdict
  double rank_tol = kDefaultRankTol;
  double disc_tol = 1e-8;
  OptimizerSettings optimizer;
  ToleranceSet tolerances;
  int protocol_targets = 0;  ///< > 0 also runs the protocol cross-check
};

struct AnalysisReport {
  std::string digest;
  Mat4c state;
  BlochForm bloch;
  CorrelationMatrix correlation;
  int l_r = 0;
  int l_t = 0;
  DiscordResult discord_a;
  DiscordResult discord_b;
  double geometric_a = 0.0;
  double geometric_b = 0.0;
  RspResult rsp;
  QuantumnessVerdict verdict;
  AnalysisOptions options;
  std::string version = kToolVersion;
  std::vector<std::string> notes;

  const DiscordResult& discord(Side s) const { return s == Side::A ? discord_a : discord_b; }
  double geometric(Side s) const { return s == Side::A ? geometric_a : geometric_b; }
};

AnalysisReport analyze(const DensityMatrix& rho, const AnalysisOptions& options = {});

/// Verdict recomputed from the report's own l_r / discord fields equals the stored one,
/// and every numeric field is finite.
bool self_consistent(const AnalysisReport& r);

void write_table(std::ostream& out, const AnalysisReport& r);
nlohmann::json to_json(const AnalysisReport& r);

/// Members of the family with rho11 - rho22 = rho44 - rho33, rho14 = rho23 = 0
/// and one common real value c on the remaining off-diagonal entries.
struct SigmaFamilySpec {
  std::array<double, 4> diagonal{0.25, 0.25, 0.25, 0.25};
  double c = 0.0;
};

/// Builds the member; ParamOutOfRange if the diagonal constraints fail,
/// NotPositive if the matrix is not a state.
DensityMatrix sigma_family_member(const SigmaFamilySpec& spec);

/// Random feasible (positive semidefinite) family member.
SigmaFamilySpec random_sigma_family_spec(std::mt19937_64& rng);

}  // namespace qcorr::cli
