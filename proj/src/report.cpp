#include "selfconf/report.hpp"

#include <fmt/format.h>

namespace selfconf {

nlohmann::json to_json(const Eigen::VectorXd& v) {
  auto j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

nlohmann::json to_json(const Eigen::MatrixXd& m) {
  auto j = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) j.push_back(to_json(Eigen::VectorXd(m.row(r).transpose())));
  return j;
}

nlohmann::json to_json(const LimitMatrix& h) {
  return {{"branch", h.branch == LimitBranch::Consensus ? "Consensus" : "Absorption"},
          {"H", to_json(h.H)}};
}

nlohmann::json to_json(const BestResponse& br, Index agent) {
  nlohmann::json j{{"agent", agent + 1}, {"kind", std::string(to_string(br.kind))}};
  j["value"] = br.value ? nlohmann::json(*br.value) : nlohmann::json(nullptr);
  j["constant_cost"] =
      br.constant_cost ? nlohmann::json(*br.constant_cost) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const ParetoRay& ray) {
  return {{"direction", to_json(ray.direction)}, {"alpha_max", ray.alpha_max}};
}

nlohmann::json to_json(const EquilibriumReport& report) {
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j{{"classification", std::string(to_string(report.classification))},
                   {"fitted_alpha", opt(report.fitted_alpha)},
                   {"deviation_value", opt(report.deviation_value)},
                   {"deviation_cost", opt(report.deviation_cost)},
                   {"current_cost", opt(report.current_cost)}};
  j["deviating_agent"] = report.deviating_agent
                             ? nlohmann::json(*report.deviating_agent + 1)
                             : nlohmann::json(nullptr);
  j["structure_checks"] = {
      {"stubborn_count", report.checks.stubborn_count},
      {"variances_equal_on_stubborn", report.checks.variances_equal_on_stubborn},
      {"restricted_ring", report.checks.restricted_ring}};
  return j;
}

nlohmann::json to_json(const OpinionRollout& rollout) {
  return {{"theta", rollout.theta},
          {"samples", rollout.samples},
          {"horizon", rollout.horizon},
          {"seed", rollout.seed},
          {"empirical_variances", to_json(rollout.empirical_variances)},
          {"mean_errors", to_json(rollout.mean_errors)}};
}

nlohmann::json summary_json(const TrajectoryRecord& rec) {
  auto reversals = nlohmann::json::array();
  for (Index r : rec.reversals) reversals.push_back(r);
  return {{"steady", to_json(rec.steady)},
          {"alpha_hat", rec.fitted_alpha},
          {"spread", rec.alpha_spread},
          {"t_final", rec.t_final},
          {"steps", rec.steps},
          {"converged", rec.converged},
          {"final_grad_norm", rec.grad_norms.empty() ? 0.0 : rec.grad_norms.back()},
          {"reversals", reversals},
          {"samples", rec.times.size()}};
}

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& rec) {
  const Eigen::Index n = rec.steady.size();
  out << "t";
  for (Eigen::Index i = 0; i < n; ++i) out << ",z_" << (i + 1);
  out << ",alpha_hat,grad_norm\n";
  for (std::size_t s = 0; s < rec.times.size(); ++s) {
    out << format_double(rec.times[s]);
    for (Eigen::Index i = 0; i < n; ++i) out << ',' << format_double(rec.profiles[s](i));
    out << ',' << format_double(rec.alpha_hats[s]) << ','
        << format_double(rec.grad_norms[s]) << '\n';
  }
}

}  // namespace selfconf
