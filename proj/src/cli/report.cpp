#include "qcorr/cli/report.hpp"

#include <cmath>
#include <iomanip>
#include <string>

#include "qcorr/cli/state_io.hpp"
#include "qcorr/error.hpp"

namespace qcorr::cli {

AnalysisReport analyze(const DensityMatrix& rho, const AnalysisOptions& options) {
  AnalysisReport r;
  r.options = options;
  r.state = rho.matrix();
  r.digest = digest(rho.matrix());
  r.bloch = bloch_decompose(rho);
  r.correlation = correlation_matrix(r.bloch);
  r.l_r = numerical_rank(r.correlation.r, options.rank_tol);
  r.l_t = numerical_rank(r.bloch.t, options.rank_tol);
  r.discord_a = discord(rho, Side::A, options.optimizer);
  r.discord_b = discord(rho, Side::B, options.optimizer);
  r.geometric_a = geometric_discord(rho, Side::A);
  r.geometric_b = geometric_discord(rho, Side::B);
  r.rsp = rsp_fidelity(rho);
  if (options.protocol_targets > 0) {
    r.rsp.protocol_fidelity = rsp_protocol_average(rho, options.protocol_targets, options.optimizer);
    r.notes.emplace_back(
        "protocol fidelity comes from a reconstructed one-bit protocol, scored as the mean of "
        "(2o-1)^2 over equatorial targets");
  }
  r.verdict = classify(r.l_r, r.discord(options.side).discord, options.disc_tol, r.l_t);
  r.notes.emplace_back("entropic discord uses rank-1 orthogonal projectors only (no general POVMs)");
  r.notes.emplace_back("mutual information I = S(A) + S(B) - S(AB), entropies in bits");
  r.notes.emplace_back("correlation matrix rows index the A operator: first row (1, y), first column (1, x)");
  if (r.verdict.kind == Quantumness::LocallyCreatableDiscord) {
    r.notes.emplace_back("L_R <= 2: rank witness inconclusive about discord surviving local-noise removal");
  }
  return r;
}

bool self_consistent(const AnalysisReport& r) {
  const double d = r.discord(r.options.side).discord;
  const QuantumnessVerdict v = classify(r.l_r, d, r.options.disc_tol, r.l_t);
  const bool finite = r.state.allFinite() && r.correlation.r.allFinite() &&
                      r.correlation.singular_values.allFinite() && std::isfinite(r.discord_a.discord) &&
                      std::isfinite(r.discord_b.discord) && std::isfinite(r.geometric_a) &&
                      std::isfinite(r.geometric_b) && std::isfinite(r.rsp.fidelity) &&
                      std::isfinite(r.rsp.efficiency);
  return finite && v.kind == r.verdict.kind && v.l_r == r.verdict.l_r;
}

namespace {

void write_row(std::ostream& out, const Eigen::RowVectorXd& row) {
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    const double v = std::abs(row(i)) < 5e-16 ? 0.0 : row(i);
    out << std::setw(11) << v;
  }
  out << '\n';
}

}  // namespace

void write_table(std::ostream& out, const AnalysisReport& r) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(6);
  out << "state digest        " << r.digest << '\n';
  out << "correlation matrix (rows: A operator 1,sx,sy,sz; columns: B operator)\n";
  for (int i = 0; i < 4; ++i) {
    out << "  ";
    write_row(out, r.correlation.r.row(i));
  }
  out << "singular values     ";
  write_row(out, r.correlation.singular_values.transpose());
  out << "L_R                 " << r.l_r << '\n';
  out << "L_T                 " << r.l_t << '\n';
  out << "mutual information  " << r.discord_b.mutual_info << " bits\n";
  for (Side s : {Side::A, Side::B}) {
    const DiscordResult& d = r.discord(s);
    out << "discord (measure " << to_string(s) << ") " << d.discord << " bits  J = " << d.classical_corr
        << "  n = (" << d.argmax_direction.n().transpose() << ")\n";
  }
  out << "geometric discord   A: " << r.geometric_a << "  B: " << r.geometric_b << '\n';
  out << "RSP fidelity        " << r.rsp.fidelity << "  (T^T T eigenvalues " << r.rsp.t1_sq << ", "
      << r.rsp.t2_sq << ", " << r.rsp.t3_sq << ")\n";
  out << "RSP efficiency      " << r.rsp.efficiency << '\n';
  if (r.rsp.protocol_fidelity) {
    out << "protocol fidelity   " << *r.rsp.protocol_fidelity << "  (reconstructed)\n";
  }
  out << "verdict             " << to_string(r.verdict.kind) << "  (discord side "
      << to_string(r.options.side) << ")\n";
  out << "tolerances          rank " << r.options.rank_tol << "  discord " << r.options.disc_tol
      << "  grid " << r.options.optimizer.polar << "x" << r.options.optimizer.azimuthal << "  refine "
      << r.options.optimizer.refine_iters << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  out << "version             " << r.version << '\n';
  out.flags(flags);
  out.precision(precision);
}

nlohmann::json to_json(const AnalysisReport& r) {
  auto vec = [](const auto& v) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
  };
  auto mat = [&](const auto& m) {
    nlohmann::json a = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i)));
    return a;
  };
  auto disc = [&](const DiscordResult& d) {
    return nlohmann::json{{"discord", d.discord},
                          {"classical_correlations", d.classical_corr},
                          {"mutual_information", d.mutual_info},
                          {"direction", vec(d.argmax_direction.n())},
                          {"measured_side", to_string(d.measured_side)}};
  };
  nlohmann::json rsp{{"fidelity", r.rsp.fidelity},
                     {"efficiency", r.rsp.efficiency},
                     {"ttt_eigenvalues", {r.rsp.t1_sq, r.rsp.t2_sq, r.rsp.t3_sq}}};
  if (r.rsp.protocol_fidelity) rsp["protocol_fidelity_reconstructed"] = *r.rsp.protocol_fidelity;
  return {
      {"version", r.version},
      {"digest", r.digest},
      {"state", matrix_to_json(r.state)},
      {"bloch", {{"x", vec(r.bloch.x)}, {"y", vec(r.bloch.y)}, {"t", mat(r.bloch.t)}}},
      {"correlation_matrix", mat(r.correlation.r)},
      {"singular_values", vec(r.correlation.singular_values)},
      {"l_r", r.l_r},
      {"l_t", r.l_t},
      {"discord", {{"A", disc(r.discord_a)}, {"B", disc(r.discord_b)}}},
      {"geometric_discord", {{"A", r.geometric_a}, {"B", r.geometric_b}}},
      {"rsp", rsp},
      {"verdict", {{"kind", to_string(r.verdict.kind)}, {"side", to_string(r.options.side)}}},
      {"tolerances",
       {{"rank", r.options.rank_tol},
        {"discord", r.options.disc_tol},
        {"grid", {r.options.optimizer.polar, r.options.optimizer.azimuthal}},
        {"refine_iters", r.options.optimizer.refine_iters},
        {"refine_shrink", r.options.optimizer.refine_shrink},
        {"herm", r.options.tolerances.herm},
        {"trace", r.options.tolerances.trace},
        {"psd", r.options.tolerances.psd}}},
      {"notes", r.notes},
  };
}

DensityMatrix sigma_family_member(const SigmaFamilySpec& spec) {
  const auto& d = spec.diagonal;
  constexpr double tol = 1e-12;
  if (std::abs(d[0] + d[1] + d[2] + d[3] - 1.0) > tol) {
    throw Error(Errc::ParamOutOfRange, "family diagonal must sum to 1");
  }
  if (std::abs((d[0] - d[1]) - (d[3] - d[2])) > tol) {
    throw Error(Errc::ParamOutOfRange, "family diagonal needs rho11 - rho22 = rho44 - rho33");
  }
  const double c = spec.c;
  Mat4c m;
  // clang-format off
  m << d[0], c,    c,    0.0,
       c,    d[1], 0.0,  c,
       c,    0.0,  d[2], c,
       0.0,  c,    c,    d[3];
  // clang-format on
  return validate_density(m);
}

SigmaFamilySpec random_sigma_family_spec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a = unit(rng);
  const double b = unit(rng);
  const double delta = -std::min(a, b) + unit(rng) * (1.0 + std::min(a, b));
  const double z = 2.0 * (a + b + delta);
  SigmaFamilySpec spec;
  spec.diagonal = {(a + delta) / z, a / z, b / z, (b + delta) / z};
  spec.diagonal[3] = 1.0 - spec.diagonal[0] - spec.diagonal[1] - spec.diagonal[2];
  spec.c = (2.0 * unit(rng) - 1.0) * 0.25;
  // Halve c until the matrix is positive semidefinite; c = 0 always is.
  for (int i = 0; i < 60; ++i) {
    try {
      sigma_family_member(spec);
      return spec;
    } catch (const Error& e) {
      if (e.code() != Errc::NotPositive) throw;
      spec.c *= 0.5;
    }
  }
  spec.c = 0.0;
  return spec;
}

}  // namespace qcorr::cli
