#include "selfconf/centrality.hpp"

#include <string>

#include "selfconf/error.hpp"

namespace selfconf {

CentralityVector::CentralityVector(Eigen::VectorXd pi) : pi_(std::move(pi)) {
  if (pi_.size() == 0 || !pi_.allFinite() || (pi_.array() <= 0.0).any())
    throw Error(ErrorCode::InvalidProfile,
                "centrality vector must be finite and strictly positive");
  if (std::abs(pi_.sum() - 1.0) > kFixedPointTolerance)
    throw Error(ErrorCode::InvalidProfile, "centrality vector must sum to 1");
}

CentralityVector centrality(const InfluenceNetwork& net) {
  const auto n = static_cast<Eigen::Index>(net.size());
  const Eigen::MatrixXd& p = net.weights();
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - p.transpose();
  system.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;

  const Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularSystem, "centrality system is singular");
  Eigen::VectorXd pi = lu.solve(rhs);

  const double residual = (p.transpose() * pi - pi).lpNorm<Eigen::Infinity>();
  if (!pi.allFinite() || (pi.array() <= 0.0).any() ||
      residual > kFixedPointTolerance)
    throw Error(ErrorCode::SingularSystem,
                "centrality solve inaccurate (residual " +
                    std::to_string(residual) + ")");
  pi /= pi.sum();
  return CentralityVector(std::move(pi));
}

}  // namespace selfconf
