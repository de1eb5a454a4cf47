#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "selfconf/dynamics.hpp"
#include "selfconf/game.hpp"
#include "selfconf/oracle.hpp"

namespace selfconf {

// JSON views of results. Agent ids are 1-based here, matching how scenarios
// number agents; the library itself is 0-based.

nlohmann::json to_json(const Eigen::VectorXd& v);
nlohmann::json to_json(const Eigen::MatrixXd& m);
nlohmann::json to_json(const LimitMatrix& h);
nlohmann::json to_json(const BestResponse& br, Index agent);
nlohmann::json to_json(const ParetoRay& ray);
nlohmann::json to_json(const EquilibriumReport& report);
nlohmann::json to_json(const OpinionRollout& rollout);
/// Summary of a run; the samples themselves go to CSV.
nlohmann::json summary_json(const TrajectoryRecord& rec);

/// Header "t,z_1,...,z_n,alpha_hat,grad_norm", then one row per sample with
/// 17 significant digits.
void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& rec);

std::string format_double(double v);

}  // namespace selfconf
