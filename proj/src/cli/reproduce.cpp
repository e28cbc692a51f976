#include "qcorr/cli/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qcorr/channels.hpp"
#include "qcorr/cli/report.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/random.hpp"
#include "qcorr/rsp.hpp"

namespace qcorr::cli {

namespace {

struct Check {
  std::string id;
  std::string reference;
  std::function<ReproRow(double tol_override, bool has_override)> run;
};

// Picks the row's own tolerance unless the caller overrides it.
double pick(double own, double override_value, bool has_override) {
  return has_override ? override_value : own;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(10);
  ss << v;
  return ss.str();
}

ReproRow row(bool passed, std::string detail) {
  ReproRow r;
  r.passed = passed;
  r.detail = std::move(detail);
  return r;
}

std::vector<Check> checks() {
  std::vector<Check> c;

  c.push_back({"1a-sigma-discord", "sigma: entropic discord ~ 2.6e-2 (orthogonal projectors)",
               [](double o, bool h) {
                 const double tol = pick(3e-3, o, h);
                 const double d = discord(reference_state(ReferenceState::Sigma), Side::B).discord;
                 return row(std::abs(d - 0.026) <= tol,
                            "D_B = " + fmt(d) + ", expected 0.026 +- " + fmt(tol));
               }});

  c.push_back({"1b-sigma-discord-oracle", "sigma: optimizer agrees with 180x360 brute-force grid",
               [](double o, bool h) {
                 const double tol = pick(2e-3, o, h);
                 const DensityMatrix s = reference_state(ReferenceState::Sigma);
                 const double d = discord(s, Side::B).discord;
                 const double oracle = discord_oracle(s, Side::B);
                 return row(std::abs(d - oracle) <= tol,
                            "optimizer " + fmt(d) + ", oracle " + fmt(oracle) + ", tol " + fmt(tol));
               }});

  c.push_back({"2-sigma-geometric", "sigma: geometric discord ~ 1e-2",
               [](double o, bool h) {
                 const double tol = pick(1e-4, o, h);
                 const double g = geometric_discord(reference_state(ReferenceState::Sigma), Side::B);
                 return row(std::abs(g - 0.01) <= tol,
                            "D_G = " + fmt(g) + ", expected 0.0100 +- " + fmt(tol));
               }});

  auto rank_check = [](ReferenceState which, int lr, int lt) {
    return [=](double, bool) {
      const DensityMatrix s = reference_state(which);
      const int got_lr = correlation_rank(s);
      const int got_lt = tensor_rank(s);
      return row(got_lr == lr && got_lt == lt,
                 "L_R = " + std::to_string(got_lr) + " (want " + std::to_string(lr) + "), L_T = " +
                     std::to_string(got_lt) + " (want " + std::to_string(lt) + ")");
    };
  };
  c.push_back({"3a-ranks-rho-cl", "rho_cl: R = diag(1,0,0,1), L_R = 2, L_T = 1",
               rank_check(ReferenceState::RhoCl, 2, 1)});
  c.push_back({"3b-ranks-rho-tilde", "rho_tilde: L_T rises to 2, L_R stays 2",
               rank_check(ReferenceState::RhoTilde, 2, 2)});
  c.push_back({"3c-ranks-sigma", "sigma: L_R = 3 and L_T = 1",
               rank_check(ReferenceState::Sigma, 3, 1)});

  c.push_back({"4-channel-chain", "(Phi x Phi) rho_cl = rho_tilde",
               [](double o, bool h) {
                 const double tol = pick(1e-12, o, h);
                 const DensityMatrix out = apply_local(reference_state(ReferenceState::RhoCl),
                                                       {zero_plus(), zero_plus()});
                 const double err =
                     (out.matrix() - reference_state(ReferenceState::RhoTilde).matrix()).cwiseAbs().maxCoeff();
                 return row(err <= tol, "max entry error " + fmt(err) + ", tol " + fmt(tol));
               }});

  auto fidelity_check = [](ReferenceState which, double expected) {
    return [=](double o, bool h) {
      const double tol = pick(1e-10, o, h);
      const double f = rsp_fidelity(reference_state(which)).fidelity;
      return row(std::abs(f - expected) <= tol,
                 "F = " + fmt(f) + ", expected " + fmt(expected) + " +- " + fmt(tol));
    };
  };
  c.push_back({"5a-fidelity-bell", "Bell state: F = 1", fidelity_check(ReferenceState::BellPhiPlus, 1.0)});
  c.push_back({"5b-fidelity-rho-cl", "rho_cl (zero discord): F = 0", fidelity_check(ReferenceState::RhoCl, 0.0)});
  c.push_back({"5c-fidelity-sigma", "sigma: F = 0 despite L_R = 3", fidelity_check(ReferenceState::Sigma, 0.0)});
  c.push_back({"5d-fidelity-rho-tilde", "rho_tilde: nonvanishing F (1/8 from T^T T)",
               fidelity_check(ReferenceState::RhoTilde, 0.125)});

  c.push_back({"6-zero-discord-no-rsp", "F = 0 for all zero-discord states (200 random)",
               [](double o, bool h) {
                 const double tol = pick(1e-8, o, h);
                 Rng rng(20240601);
                 double worst = 0.0;
                 for (int i = 0; i < 200; ++i) {
                   const Side side = i % 2 == 0 ? Side::B : Side::A;
                   worst = std::max(worst, rsp_fidelity(random_classical_quantum(rng, side)).fidelity);
                 }
                 return row(worst < tol, "max F = " + fmt(worst) + ", bound " + fmt(tol));
               }});

  c.push_back({"7-rank-monotonicity", "L_R nonincreasing under local operations (1000 trials)",
               [](double, bool) {
                 Rng rng(777);
                 std::uniform_int_distribution<int> kind(0, 3);
                 std::uniform_int_distribution<int> kraus(1, 4);
                 std::uniform_int_distribution<int> rank(1, 4);
                 int violations = 0;
                 for (int i = 0; i < 1000; ++i) {
                   DensityMatrix rho = reference_state(ReferenceState::RhoCl);
                   switch (kind(rng)) {
                     case 0: rho = random_density(rng, rank(rng)); break;
                     case 1: rho = random_product_state(rng); break;
                     case 2: rho = random_classical_quantum(rng, Side::B); break;
                     default: rho = random_classical_classical(rng); break;
                   }
                   const LocalProductMap map{random_channel(rng, kraus(rng)), random_channel(rng, kraus(rng))};
                   const DensityMatrix out = apply_local(rho, map);
                   if (correlation_rank(out, 1e-7) > correlation_rank(rho, 1e-7)) ++violations;
                 }
                 return row(violations == 0, std::to_string(violations) + " violations");
               }});

  c.push_back({"8-sigma-family", "family rho11-rho22 = rho44-rho33: L_T <= 1, F = 0, some discord",
               [](double o, bool h) {
                 const double tol = pick(1e-8, o, h);
                 std::mt19937_64 rng(4242);
                 int bad = 0;
                 double max_f = 0.0;
                 double max_discord = discord(reference_state(ReferenceState::Sigma), Side::B).discord;
                 for (int i = 0; i < 100; ++i) {
                   const DensityMatrix m = sigma_family_member(random_sigma_family_spec(rng));
                   const double f = rsp_fidelity(m).fidelity;
                   max_f = std::max(max_f, f);
                   if (tensor_rank(m) > 1 || !(f < tol)) ++bad;
                   if (max_discord <= 1e-3) max_discord = std::max(max_discord, discord(m, Side::B).discord);
                 }
                 return row(bad == 0 && max_discord > 1e-3,
                            std::to_string(bad) + " members with L_T > 1 or F >= tol, max F " + fmt(max_f) +
                                ", max discord seen " + fmt(max_discord));
               }});

  c.push_back({"9-pure-state-oracle", "pure states: discord equals marginal entropy (50 random)",
               [](double o, bool h) {
                 const double tol = pick(1e-4, o, h);
                 Rng rng(99);
                 double worst = 0.0;
                 for (int i = 0; i < 50; ++i) {
                   const DensityMatrix psi = random_density(rng, 1);
                   const double s = von_neumann_entropy(partial_trace(psi, Side::A));
                   for (Side side : {Side::A, Side::B}) {
                     worst = std::max(worst, std::abs(discord(psi, side).discord - s));
                   }
                 }
                 return row(worst <= tol, "max |D - S(A)| = " + fmt(worst) + ", tol " + fmt(tol));
               }});

  auto protocol_check = [](ReferenceState which) {
    return [=](double o, bool h) {
      const double tol = pick(1e-3, o, h);
      const DensityMatrix s = reference_state(which);
      const double closed = rsp_fidelity(s).fidelity;
      const double protocol = rsp_protocol_average(s, 16);
      return row(std::abs(closed - protocol) <= tol,
                 "closed form " + fmt(closed) + ", protocol " + fmt(protocol) + ", tol " + fmt(tol));
    };
  };
  c.push_back({"10a-protocol-bell", "reconstructed protocol matches F for the Bell state",
               protocol_check(ReferenceState::BellPhiPlus)});
  c.push_back({"10b-protocol-rho-cl", "reconstructed protocol matches F for rho_cl",
               protocol_check(ReferenceState::RhoCl)});
  c.push_back({"10c-protocol-rho-tilde", "rho_tilde: closed form vs protocol (reported only)",
               [](double, bool) {
                 const DensityMatrix s = reference_state(ReferenceState::RhoTilde);
                 const double closed = rsp_fidelity(s).fidelity;
                 const double protocol = rsp_protocol_average(s, 16);
                 ReproRow r = row(true, "closed form " + fmt(closed) + ", protocol " + fmt(protocol));
                 r.asserted = false;
                 return r;
               }});
  return c;
}

}  // namespace

std::vector<ReproRow> list_reproduction_rows() {
  std::vector<ReproRow> rows;
  for (const auto& c : checks()) {
    ReproRow r;
    r.id = c.id;
    r.reference = c.reference;
    rows.push_back(r);
  }
  return rows;
}

std::vector<ReproRow> run_reproduction(const ReproduceOptions& options) {
  std::vector<ReproRow> rows;
  for (const auto& c : checks()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    ReproRow r;
    try {
      r = c.run(options.tol.value_or(0.0), options.tol.has_value());
    } catch (const std::exception& e) {
      r = row(false, std::string("error: ") + e.what());
    }
    r.id = c.id;
    r.reference = c.reference;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace qcorr::cli
